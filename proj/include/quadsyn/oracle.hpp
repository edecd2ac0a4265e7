#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "quadsyn/projective.hpp"

namespace quadsyn {

/// Coefficients of x^2, xy, xz, xw, y^2, yz, yw, z^2, zw, w^2.
using QuadricCoeffs = std::array<Rational, 10>;

/// Degree-2 monomials of v in QuadricCoeffs order.
std::array<Rational, 10> veronese_row(const Vec4& v);
inline std::array<Rational, 10> veronese_row(const Point& p) { return veronese_row(p.coords()); }

Rational evaluate(const QuadricCoeffs& q, const Point& p);
bool vanishes_on(const QuadricCoeffs& q, std::span<const Point> pts);

/// det of the 10x10 matrix N with rows veronese_row(p_i), over the
/// canonical integer coordinates.
Integer det_N(std::span<const Point> pts);

/// True iff det(N) = 0.
bool oracle_decide(std::span<const Point> pts);

/// Basis of the quadrics through the given points (kernel of the stacked
/// Veronese rows).
std::vector<QuadricCoeffs> quadric_through(std::span<const Point> pts);

/// Product of two linear forms as a quadric.
QuadricCoeffs product_of_forms(const Vec4& h1, const Vec4& h2);

/// Seeded generator; draws are reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform on [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// num / den with |num| <= num_bound, 1 <= den <= den_bound.
  Rational rational(std::int64_t num_bound, std::int64_t den_bound);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::uint64_t state_[4];
};

/// splitmix64 step, used to derive per-item seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Invertible transform with integer entries in [-bound, bound].
ProjectiveTransform random_transform(Rng& rng, std::int64_t bound = 9);

struct SamplerBounds {
  std::int64_t num = 1000;
  std::int64_t den = 1000;
};

/// Points [1:s:t:st] of xw - yz = 0, optionally pushed through a random
/// transform drawn from the same generator.
std::vector<Point> sample_on_quadric(std::uint64_t seed, int n, bool transform = true, SamplerBounds b = {});
std::vector<Point> sample_generic(std::uint64_t seed, int n, SamplerBounds b = {});

}  // namespace quadsyn
