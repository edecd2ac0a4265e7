#include "quadsyn/rational.hpp"

#include <cctype>

#include "quadsyn/error.hpp"

namespace quadsyn {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotCollinear: return "NotCollinear";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::DegenerateWitness: return "DegenerateWitness";
    case ErrorKind::GradeOverflow: return "GradeOverflow";
    case ErrorKind::ZeroExtensor: return "ZeroExtensor";
    case ErrorKind::NotSkew: return "NotSkew";
    case ErrorKind::OnOppositeEdge: return "OnOppositeEdge";
    case ErrorKind::NotInChart: return "NotInChart";
    case ErrorKind::InconsistentProjections: return "InconsistentProjections";
    case ErrorKind::InfinityProduct: return "InfinityProduct";
    case ErrorKind::DegenerateMeet: return "DegenerateMeet";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::NoPermutation: return "NoPermutation";
    case ErrorKind::ZeroColumn: return "ZeroColumn";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && (!is_integer_literal(den) || den.front() == '-'))) {
    fail(ErrorKind::Parse, "not a rational literal: '" + std::string(text) + "'");
  }
  Rational r;
  r.get_num() = Integer(std::string(num), 10);
  r.get_den() = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den), 10);
  if (sgn(r.get_den()) == 0) fail(ErrorKind::Parse, "zero denominator: '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& value) { return value.get_str(10); }

Param Param::reciprocal() const {
  if (infinite_) return Param(Rational(0));
  if (sgn(value_) == 0) return infinity();
  return Param(Rational(1) / value_);
}

Param operator*(const Param& a, const Param& b) {
  if ((a.is_infinite() && b.is_zero()) || (a.is_zero() && b.is_infinite())) {
    fail(ErrorKind::InfinityProduct, "0 * inf is undefined");
  }
  if (a.is_infinite() || b.is_infinite()) return Param::infinity();
  return Param(Rational(a.value() * b.value()));
}

bool operator==(const Param& a, const Param& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return a.value() == b.value();
}

std::string Param::to_string() const { return infinite_ ? "inf" : format_rational(value_); }

}  // namespace quadsyn
