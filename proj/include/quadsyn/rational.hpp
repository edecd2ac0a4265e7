#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quadsyn {

/// Exact rational. GMP keeps it canonical: denominator > 0 and
/// gcd(|num|, den) = 1 after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Accepts "p" or "p/q" with optional leading '-', decimal digits only.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q = 1.
std::string format_rational(const Rational& value);

/// A local parameter on a projective line: a rational or the point at
/// infinity. Arithmetic is limited to what the von Staudt fallbacks need.
class Param {
 public:
  Param() = default;
  Param(Rational value) : value_(std::move(value)) {}  // NOLINT(implicit)

  static Param infinity() {
    Param p;
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const noexcept { return infinite_; }
  bool is_zero() const { return !infinite_ && sgn(value_) == 0; }
  /// Only meaningful when finite.
  const Rational& value() const { return value_; }

  /// 1/0 = inf, 1/inf = 0.
  Param reciprocal() const;

  /// 0 * inf throws InfinityProduct.
  friend Param operator*(const Param& a, const Param& b);
  friend bool operator==(const Param& a, const Param& b);

  std::string to_string() const;

 private:
  bool infinite_ = false;
  Rational value_{0};
};

}  // namespace quadsyn
