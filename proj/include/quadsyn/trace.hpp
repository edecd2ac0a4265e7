#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadsyn/extensor.hpp"

namespace quadsyn {

enum class StepOp { Point, Join, Meet, Product, Inverse, Projection, Recover, LocalParam, DegenerateProduct };

std::string_view to_string(StepOp op);
std::optional<StepOp> step_op_from_string(std::string_view name);

/// One drawn object. Grade-1 outputs are stored canonically; lines and
/// planes are stored as the raw join of their (canonical) defining points.
///
/// Input order for the composite ops:
///   product:             zero, infinity, unit, px, py, a, L' point, witness
///   degenerate-product:  zero, infinity, unit, px, py
///   inverse:             zero, infinity, unit, px, a, L' point, witness
///   projection:          Vi, Vj, Vk, Vl, p
///   recover:             Vi, Vj, Vk, Vl, p_ij, p_ik, p_il
///   local-param:         d, e, a, b, c
struct Step {
  int id = 0;
  StepOp op = StepOp::Point;
  std::vector<int> inputs;
  Extensor output = Extensor::zero(0);
  std::string label;
};

/// Append-only construction record. Ids are step indices.
class Trace {
 public:
  /// Literal point, or the earliest step that already produced it.
  int point(const Point& p, std::string label = {});
  int join(int a, int b);
  int meet(int a, int b);
  /// Composite step; the output is supplied by the caller.
  int add(StepOp op, std::vector<int> inputs, Extensor output, std::string label = {});

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  const Step& at(int id) const { return steps_.at(static_cast<std::size_t>(id)); }
  const Extensor& output(int id) const { return at(id).output; }
  Point point_of(int id) const { return output(id).to_point(); }
  void set_label(int id, std::string label) { steps_.at(static_cast<std::size_t>(id)).label = std::move(label); }

  /// Copies other's steps after ours; returns old id -> new id.
  std::vector<int> append(const Trace& other);

 private:
  int push(Step s);

  std::vector<Step> steps_;
  std::map<Point, int> by_point_;
};

struct ReplayReport {
  bool ok = true;
  std::size_t checked = 0;
  int first_mismatch = -1;
  std::string message;
};

/// Recomputes every step from its inputs and compares outputs exactly.
ReplayReport replay(const Trace& trace);

}  // namespace quadsyn
