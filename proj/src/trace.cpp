#include "quadsyn/trace.hpp"

#include <array>

#include "quadsyn/error.hpp"

namespace quadsyn {

namespace {

constexpr std::array<std::pair<StepOp, std::string_view>, 9> kOpNames{{
    {StepOp::Point, "point"},
    {StepOp::Join, "join"},
    {StepOp::Meet, "meet"},
    {StepOp::Product, "product"},
    {StepOp::Inverse, "inverse"},
    {StepOp::Projection, "projection"},
    {StepOp::Recover, "recover"},
    {StepOp::LocalParam, "local-param"},
    {StepOp::DegenerateProduct, "degenerate-product"},
}};

Extensor normalized(Extensor e) {
  if (e.grade() == 1 && !e.is_zero()) return Extensor::point(e.to_point());
  return e;
}

}  // namespace

std::string_view to_string(StepOp op) {
  for (const auto& [o, name] : kOpNames) {
    if (o == op) return name;
  }
  return "unknown";
}

std::optional<StepOp> step_op_from_string(std::string_view name) {
  for (const auto& [o, n] : kOpNames) {
    if (n == name) return o;
  }
  return std::nullopt;
}

int Trace::push(Step s) {
  s.id = static_cast<int>(steps_.size());
  for (int in : s.inputs) {
    if (in < 0 || in >= s.id) fail(ErrorKind::PreconditionViolated, "trace input does not precede its use");
  }
  s.output = normalized(std::move(s.output));
  if (s.output.grade() == 1 && !s.output.is_zero()) by_point_.try_emplace(s.output.to_point(), s.id);
  steps_.push_back(std::move(s));
  return steps_.back().id;
}

int Trace::point(const Point& p, std::string label) {
  if (auto it = by_point_.find(p); it != by_point_.end()) {
    if (!label.empty() && steps_[static_cast<std::size_t>(it->second)].label.empty()) set_label(it->second, std::move(label));
    return it->second;
  }
  return push(Step{0, StepOp::Point, {}, Extensor::point(p), std::move(label)});
}

int Trace::join(int a, int b) {
  return push(Step{0, StepOp::Join, {a, b}, quadsyn::join(output(a), output(b)), {}});
}

int Trace::meet(int a, int b) {
  return push(Step{0, StepOp::Meet, {a, b}, quadsyn::meet(output(a), output(b)), {}});
}

int Trace::add(StepOp op, std::vector<int> inputs, Extensor output, std::string label) {
  return push(Step{0, op, std::move(inputs), std::move(output), std::move(label)});
}

std::vector<int> Trace::append(const Trace& other) {
  std::vector<int> remap(other.size());
  for (const Step& s : other.steps()) {
    if (s.op == StepOp::Point) {
      remap[static_cast<std::size_t>(s.id)] = point(s.output.to_point(), s.label);
      continue;
    }
    Step copy = s;
    for (int& in : copy.inputs) in = remap[static_cast<std::size_t>(in)];
    remap[static_cast<std::size_t>(s.id)] = push(std::move(copy));
  }
  return remap;
}

}  // namespace quadsyn
