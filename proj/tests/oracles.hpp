#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's own determinant, meet or construction code.

#include <algorithm>
#include <numeric>
#include <vector>

#include "quadsyn/oracle.hpp"
#include "quadsyn/projective.hpp"

namespace oracles {

using quadsyn::Point;
using quadsyn::Rational;
using quadsyn::Vec4;
using Matrix = std::vector<std::vector<Rational>>;

inline int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

/// Sum over all permutations. Fine up to n = 7.
inline Rational leibniz_det(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    Rational term = permutation_sign(p);
    for (std::size_t r = 0; r < n; ++r) term *= m[r][static_cast<std::size_t>(p[r])];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

/// Laplace expansion along the first row.
inline Rational cofactor_det(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Rational sub = cofactor_det(minor);
    total += (c % 2 == 0 ? sub : Rational(-sub)) * m[0][c];
  }
  return total;
}

inline Rational bracket_cofactor(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) {
  Matrix m(4, std::vector<Rational>(4));
  for (std::size_t r = 0; r < 4; ++r) {
    m[r][0] = a[r];
    m[r][1] = b[r];
    m[r][2] = c[r];
    m[r][3] = d[r];
  }
  return cofactor_det(m);
}

inline Rational bracket_cofactor(const Point& a, const Point& b, const Point& c, const Point& d) {
  return bracket_cofactor(a.coords(), b.coords(), c.coords(), d.coords());
}

/// The coordinate form of Q with points 0..3 at the coordinate basis.
inline Rational q_polynomial(const Vec4& p4, const Vec4& p5) {
  const auto &x4 = p4[0], &y4 = p4[1], &z4 = p4[2], &w4 = p4[3];
  const auto &x5 = p5[0], &y5 = p5[1], &z5 = p5[2], &w5 = p5[3];
  return Rational(-x5 * y4 * z5 * w4 + x4 * y5 * z5 * w4 + x5 * y4 * z4 * w5 - x4 * y4 * z5 * w5);
}

/// Solves [c0 c1 c2 c3] y = v by Cramer's rule with cofactor brackets.
inline Vec4 solve_in_basis(const std::array<Vec4, 4>& cols, const Vec4& v) {
  const Rational d = bracket_cofactor(cols[0], cols[1], cols[2], cols[3]);
  Vec4 y;
  for (std::size_t i = 0; i < 4; ++i) {
    auto c = cols;
    c[i] = v;
    y[i] = bracket_cofactor(c[0], c[1], c[2], c[3]) / d;
  }
  return y;
}

/// sum_i m_i v_i over canonical vertex vectors: the image of a column
/// under E_i -> vertex i, (1,1,1,1) -> sum of the vertices.
inline Point tau_image(const std::array<Point, 4>& vertices, const std::array<Rational, 4>& m) {
  Vec4 v{0, 0, 0, 0};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) v[k] += m[i] * vertices[i].coords()[k];
  return Point(v);
}

/// Parameter of p on the line through zero and inf, with unit zero + inf
/// on the given raw vectors: p = alpha zero + beta inf gives beta / alpha.
/// Returns false for p = inf.
inline bool param_by_solving(const Vec4& zero, const Vec4& inf, const Vec4& p, Rational& out) {
  // Find two coordinates where the 2x2 minor of (zero, inf) is nonzero.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const Rational det = zero[i] * inf[j] - zero[j] * inf[i];
      if (sgn(det) == 0) continue;
      const Rational alpha = (p[i] * inf[j] - p[j] * inf[i]) / det;
      const Rational beta = (zero[i] * p[j] - zero[j] * p[i]) / det;
      if (sgn(alpha) == 0) return false;
      out = beta / alpha;
      return true;
    }
  return false;
}

inline Vec4 rand_vec(quadsyn::Rng& rng, std::int64_t num = 50, std::int64_t den = 7) {
  for (;;) {
    Vec4 v{rng.rational(num, den), rng.rational(num, den), rng.rational(num, den), rng.rational(num, den)};
    if (!quadsyn::is_zero(v)) return v;
  }
}

inline Point rand_point(quadsyn::Rng& rng) { return Point(rand_vec(rng)); }

inline Rational rand_nonzero(quadsyn::Rng& rng, std::int64_t num = 20, std::int64_t den = 5) {
  for (;;) {
    Rational r = rng.rational(num, den);
    if (sgn(r) != 0) return r;
  }
}

/// Random 4x4 integer matrix with nonzero determinant, as a column list.
inline std::array<Vec4, 4> rand_frame(quadsyn::Rng& rng) {
  for (;;) {
    std::array<Vec4, 4> c{rand_vec(rng, 9, 1), rand_vec(rng, 9, 1), rand_vec(rng, 9, 1), rand_vec(rng, 9, 1)};
    if (sgn(bracket_cofactor(c[0], c[1], c[2], c[3])) != 0) return c;
  }
}

inline Vec4 combo(const std::vector<std::pair<Rational, Vec4>>& parts) {
  Vec4 v{0, 0, 0, 0};
  for (const auto& [s, u] : parts)
    for (std::size_t k = 0; k < 4; ++k) v[k] += s * u[k];
  return v;
}

}  // namespace oracles
