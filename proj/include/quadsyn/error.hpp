#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadsyn {

enum class ErrorKind {
  ZeroVector,
  Singular,
  NotCollinear,
  CoincidentPoints,
  DegenerateWitness,
  GradeOverflow,
  ZeroExtensor,
  NotSkew,
  OnOppositeEdge,
  NotInChart,
  InconsistentProjections,
  InfinityProduct,
  DegenerateMeet,
  Degenerate,
  NoPermutation,
  ZeroColumn,
  PreconditionViolated,
  InternalInconsistency,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can dispatch on it without parsing messages.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw GeometryError(kind, what);
}

}  // namespace quadsyn
