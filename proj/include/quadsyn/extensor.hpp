#pragma once

#include <vector>

#include "quadsyn/projective.hpp"

namespace quadsyn {

/// Element of the exterior algebra of a 4-dimensional space, homogeneous
/// of one grade. Coefficients are indexed by the sorted grade-subsets of
/// {0,1,2,3} in lexicographic order, e.g. grade 2: 01 02 03 12 13 23.
/// Grade 0 and grade 4 hold a single scalar; e0e1e2e3 is identified with 1.
class Extensor {
 public:
  Extensor(int grade, std::vector<Rational> coeffs);

  static Extensor zero(int grade);
  static Extensor scalar(const Rational& value, int grade = 0);
  static Extensor vector(const Vec4& v);
  static Extensor point(const Point& p) { return vector(p.coords()); }

  int grade() const noexcept { return grade_; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const;

  /// Coefficient of e_S for S given as a bitmask over {0,1,2,3}.
  const Rational& coeff_of_mask(unsigned mask) const;

  /// Grade 0 or 4 only.
  const Rational& scalar_value() const;
  /// Grade 1 only.
  Vec4 to_vector() const;
  /// Grade 1, nonzero.
  Point to_point() const;

  Extensor operator*(const Rational& s) const;
  Extensor operator+(const Extensor& o) const;

  friend bool operator==(const Extensor& a, const Extensor& b) {
    return a.grade_ == b.grade_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int grade_;
  std::vector<Rational> coeffs_;
};

/// Sorted subsets of {0,1,2,3} of the given size, as bitmasks, in
/// coefficient order.
const std::vector<unsigned>& subsets_of_grade(int grade);

/// Wedge product. Throws GradeOverflow when the grades sum past 4.
Extensor join(const Extensor& a, const Extensor& b);
Extensor join(const Point& a, const Point& b);
Extensor join(const Point& a, const Point& b, const Point& c);

/// Shuffle product: grade j + k - 4, zero (grade 0) when j + k < 4.
Extensor meet(const Extensor& a, const Extensor& b);

/// Points spanning {v : a v = 0}. Throws ZeroExtensor for a = 0 or grade 0.
std::vector<Point> support_basis(const Extensor& a);

/// p01 p23 - p02 p13 + p03 p12 for a grade-2 extensor; zero iff decomposable.
Rational plucker_relation(const Extensor& line);

/// Lines (grade 2) are skew iff their join is a nonzero scalar.
bool skew(const Extensor& l1, const Extensor& l2);

/// Linear form X -> [a b c X] of the plane through three points, as
/// coefficients of x, y, z, w.
Vec4 plane_form(const Point& a, const Point& b, const Point& c);
/// Same, for any nonzero grade-3 extensor.
Vec4 plane_form(const Extensor& plane);

/// The scalar join(meet(join(x, l0), l1), join(x, l2)); zero iff x lies on
/// the quadric through the three mutually skew lines. Throws NotSkew.
Rational grassmann_criterion(const Point& x, const Extensor& l0, const Extensor& l1, const Extensor& l2);

}  // namespace quadsyn
