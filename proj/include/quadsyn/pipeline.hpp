#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "quadsyn/decision.hpp"

namespace quadsyn {

struct DecideOptions {
  bool record_trace = false;
  /// Build the four test points concurrently.
  bool parallel = false;
};

/// Reductions, then the generic construction.
Decision decide(std::span<const Point> pts, const DecideOptions& options = {});

enum class Exec { Serial, Parallel };

using Config = std::vector<Point>;

/// Results are in input order for both modes.
std::vector<Decision> decide_batch(std::span<const Config> configs, Exec exec, const DecideOptions& options = {});
std::vector<std::uint8_t> oracle_batch(std::span<const Config> configs, Exec exec);

}  // namespace quadsyn
