#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quadsyn/rational.hpp"

namespace quadsyn {

using Vec2 = std::array<Rational, 2>;
using Vec3 = std::array<Rational, 3>;
using Vec4 = std::array<Rational, 4>;

Vec4 operator+(const Vec4& a, const Vec4& b);
Vec4 operator-(const Vec4& a, const Vec4& b);
Vec4 operator*(const Rational& s, const Vec4& v);
bool is_zero(const Vec4& v);

/// A point of P^3. Coordinates are kept in canonical form: coprime
/// integers with the first nonzero entry positive, so equality of points
/// is equality of coordinate arrays.
class Point {
 public:
  /// Throws ZeroVector for the zero vector.
  explicit Point(const Vec4& raw);
  Point(const Rational& x, const Rational& y, const Rational& z, const Rational& w)
      : Point(Vec4{x, y, z, w}) {}

  static Point basis(int i);

  const Vec4& coords() const noexcept { return coords_; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const Point& a, const Point& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const Point& a, const Point& b);

  std::string to_string() const;

 private:
  Vec4 coords_;
};

/// Canonical representative of the line through raw, as a raw vector.
Vec4 canonical(const Vec4& raw);

/// [abcd]: determinant of the 4x4 matrix with columns a, b, c, d.
Rational bracket(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d);
inline Rational bracket(const Point& a, const Point& b, const Point& c, const Point& d) {
  return bracket(a.coords(), b.coords(), c.coords(), d.coords());
}

int rank_of_vectors(std::span<const Vec4> vs);
int rank_of_points(std::span<const Point> pts);
int rank_of_points(std::initializer_list<Point> pts);

bool collinear(const Point& a, const Point& b, const Point& c);
bool coplanar(const Point& a, const Point& b, const Point& c, const Point& d);

/// Cross ratio (a,b;c,d) = [ac][bd] / ([ad][bc]); returns infinity when the
/// denominator vanishes. With a = infinity, b = zero, c = unit this is the
/// local parameter of d.
Param cross_ratio(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d);
/// Points on a line of P^2, measured against a witness q off the line.
Param cross_ratio(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d, const Vec3& q);
/// Points on a line of P^3, measured against witnesses q, r spanning a
/// complement of the line.
Param cross_ratio(const Point& a, const Point& b, const Point& c, const Point& d, const Point& q,
                  const Point& r);
/// As above, witnesses taken from the first pair of coordinate points that
/// complement the line.
Param cross_ratio(const Point& a, const Point& b, const Point& c, const Point& d);

using Mat4 = std::array<std::array<Rational, 4>, 4>;

Rational determinant(const Mat4& m);

/// Invertible 4x4 change of coordinates acting on column vectors.
class ProjectiveTransform {
 public:
  /// Throws Singular when det(m) = 0.
  explicit ProjectiveTransform(const Mat4& m);

  static ProjectiveTransform identity();
  /// Columns are the images of e0..e3.
  static ProjectiveTransform from_columns(const std::array<Vec4, 4>& columns);

  const Mat4& matrix() const noexcept { return m_; }
  const Rational& det() const noexcept { return det_; }

  Vec4 apply(const Vec4& v) const;
  Point apply(const Point& p) const { return Point(apply(p.coords())); }
  ProjectiveTransform inverse() const;

 private:
  Mat4 m_;
  Rational det_;
};

}  // namespace quadsyn
