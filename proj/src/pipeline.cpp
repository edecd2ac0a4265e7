#include "quadsyn/pipeline.hpp"

#include <exception>

#include "quadsyn/generic_case.hpp"
#include "quadsyn/reductions.hpp"

namespace quadsyn {

Decision decide(std::span<const Point> pts, const DecideOptions& options) {
  Normalized n = normalize(pts);
  if (n.decision) return std::move(*n.decision);
  const std::vector<Point> labeled = apply_labeling(pts, n.labeling);
  Decision d = decide_generic(labeled, GenericOptions{options.record_trace, options.parallel});
  d.labeling = compose(n.labeling, d.labeling);
  n.route.insert(n.route.end(), d.route.begin(), d.route.end());
  d.route = std::move(n.route);
  return d;
}

std::vector<Decision> decide_batch(std::span<const Config> configs, Exec exec, const DecideOptions& options) {
  const auto n = static_cast<std::ptrdiff_t>(configs.size());
  std::vector<Decision> out(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = decide(configs[k], options);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<std::uint8_t> oracle_batch(std::span<const Config> configs, Exec exec) {
  const auto n = static_cast<std::ptrdiff_t>(configs.size());
  std::vector<std::uint8_t> out(configs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = oracle_decide(configs[k]) ? 1 : 0;
  }
  return out;
}

}  // namespace quadsyn
