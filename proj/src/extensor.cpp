#include "quadsyn/extensor.hpp"

#include <algorithm>
#include <bit>

#include "quadsyn/error.hpp"
#include "quadsyn/linalg.hpp"

namespace quadsyn {

namespace {

constexpr unsigned kFull = 0b1111;

std::array<std::vector<unsigned>, 5> build_subsets() {
  std::array<std::vector<unsigned>, 5> out;
  std::vector<std::vector<int>> all;
  for (unsigned m = 0; m < 16; ++m) {
    std::vector<int> s;
    for (int i = 0; i < 4; ++i) {
      if (m & (1u << i)) s.push_back(i);
    }
    all.push_back(std::move(s));
  }
  std::sort(all.begin(), all.end());
  for (const auto& s : all) {
    unsigned m = 0;
    for (int i : s) m |= 1u << i;
    out[s.size()].push_back(m);
  }
  return out;
}

const std::array<std::vector<unsigned>, 5>& subsets() {
  static const auto table = build_subsets();
  return table;
}

std::size_t index_of(unsigned mask) {
  static const auto table = [] {
    std::array<std::size_t, 16> idx{};
    for (int g = 0; g <= 4; ++g) {
      const auto& s = subsets()[g];
      for (std::size_t i = 0; i < s.size(); ++i) idx[s[i]] = i;
    }
    return idx;
  }();
  return table[mask];
}

std::size_t binom4(int k) {
  static constexpr std::size_t b[] = {1, 4, 6, 4, 1};
  return b[k];
}

// Number of pairs (x in s, y in t) with x > y, i.e. the transpositions
// needed to sort the concatenation (s, t).
int inversions(unsigned s, unsigned t) {
  int n = 0;
  for (int x = 0; x < 4; ++x) {
    if (!(s & (1u << x))) continue;
    n += std::popcount(t & ((1u << x) - 1));
  }
  return n;
}

}  // namespace

const std::vector<unsigned>& subsets_of_grade(int grade) { return subsets().at(static_cast<std::size_t>(grade)); }

Extensor::Extensor(int grade, std::vector<Rational> coeffs) : grade_(grade), coeffs_(std::move(coeffs)) {
  if (grade < 0 || grade > 4) fail(ErrorKind::GradeOverflow, "grade outside 0..4");
  if (coeffs_.size() != binom4(grade)) fail(ErrorKind::PreconditionViolated, "coefficient count does not match grade");
}

Extensor Extensor::zero(int grade) {
  if (grade < 0 || grade > 4) fail(ErrorKind::GradeOverflow, "grade outside 0..4");
  return Extensor(grade, std::vector<Rational>(binom4(grade), Rational(0)));
}

Extensor Extensor::scalar(const Rational& value, int grade) {
  if (grade != 0 && grade != 4) fail(ErrorKind::PreconditionViolated, "scalars live in grade 0 or 4");
  return Extensor(grade, {value});
}

Extensor Extensor::vector(const Vec4& v) { return Extensor(1, {v[0], v[1], v[2], v[3]}); }

bool Extensor::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

const Rational& Extensor::coeff_of_mask(unsigned mask) const {
  if (std::popcount(mask) != grade_) fail(ErrorKind::PreconditionViolated, "mask grade mismatch");
  return coeffs_[index_of(mask)];
}

const Rational& Extensor::scalar_value() const {
  if (grade_ != 0 && grade_ != 4) fail(ErrorKind::PreconditionViolated, "not a scalar grade");
  return coeffs_[0];
}

Vec4 Extensor::to_vector() const {
  if (grade_ != 1) fail(ErrorKind::PreconditionViolated, "not a grade-1 extensor");
  return {coeffs_[0], coeffs_[1], coeffs_[2], coeffs_[3]};
}

Point Extensor::to_point() const {
  if (is_zero()) fail(ErrorKind::ZeroExtensor, "zero extensor has no point");
  return Point(to_vector());
}

Extensor Extensor::operator*(const Rational& s) const {
  Extensor out = *this;
  for (auto& c : out.coeffs_) c *= s;
  return out;
}

Extensor Extensor::operator+(const Extensor& o) const {
  if (o.grade_ != grade_) fail(ErrorKind::PreconditionViolated, "adding extensors of different grades");
  Extensor out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
  return out;
}

Extensor join(const Extensor& a, const Extensor& b) {
  const int g = a.grade() + b.grade();
  if (g > 4) fail(ErrorKind::GradeOverflow, "join grade exceeds 4");
  Extensor out = Extensor::zero(g);
  std::vector<Rational> acc(out.coeffs());
  const auto& sa = subsets_of_grade(a.grade());
  const auto& sb = subsets_of_grade(b.grade());
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sgn(a.coeffs()[i]) == 0) continue;
    for (std::size_t j = 0; j < sb.size(); ++j) {
      if ((sa[i] & sb[j]) != 0 || sgn(b.coeffs()[j]) == 0) continue;
      const Rational term = a.coeffs()[i] * b.coeffs()[j];
      auto& slot = acc[index_of(sa[i] | sb[j])];
      if (inversions(sa[i], sb[j]) % 2) slot -= term;
      else slot += term;
    }
  }
  return Extensor(g, std::move(acc));
}

Extensor join(const Point& a, const Point& b) { return join(Extensor::point(a), Extensor::point(b)); }
Extensor join(const Point& a, const Point& b, const Point& c) { return join(join(a, b), Extensor::point(c)); }

Extensor meet(const Extensor& a, const Extensor& b) {
  const int j = a.grade();
  const int k = b.grade();
  if (j + k < 4) return Extensor::zero(0);
  const int g = j + k - 4;
  std::vector<Rational> acc(binom4(g), Rational(0));
  const auto& sa = subsets_of_grade(j);
  const auto& sb = subsets_of_grade(k);
  for (std::size_t ia = 0; ia < sa.size(); ++ia) {
    if (sgn(a.coeffs()[ia]) == 0) continue;
    for (std::size_t ib = 0; ib < sb.size(); ++ib) {
      if (sgn(b.coeffs()[ib]) == 0) continue;
      // Shuffle split of S into (S1, S2) with |S1| = 4 - k; only the split
      // with S1 = complement(T) has a nonzero bracket [e_S1 e_T].
      const unsigned s1 = kFull & ~sb[ib];
      if ((sa[ia] & s1) != s1) continue;
      const unsigned s2 = sa[ia] & ~s1;
      const int parity = inversions(s1, s2) + inversions(s1, sb[ib]);
      const Rational term = a.coeffs()[ia] * b.coeffs()[ib];
      auto& slot = acc[index_of(s2)];
      if (parity % 2) slot -= term;
      else slot += term;
    }
  }
  return Extensor(g, std::move(acc));
}

std::vector<Point> support_basis(const Extensor& a) {
  if (a.grade() == 0 || a.is_zero()) fail(ErrorKind::ZeroExtensor, "support of a zero or scalar extensor");
  if (a.grade() == 4) return {Point::basis(0), Point::basis(1), Point::basis(2), Point::basis(3)};
  // Kernel of v -> a v.
  const std::size_t out = binom4(a.grade() + 1);
  linalg::RatMatrix m(out, std::vector<Rational>(4));
  for (int c = 0; c < 4; ++c) {
    const Extensor img = join(a, Extensor::point(Point::basis(c)));
    for (std::size_t r = 0; r < out; ++r) m[r][static_cast<std::size_t>(c)] = img.coeffs()[r];
  }
  const auto ker = linalg::kernel(std::move(m), 4);
  if (static_cast<int>(ker.size()) != a.grade()) fail(ErrorKind::Degenerate, "extensor is not decomposable");
  std::vector<Point> pts;
  for (const auto& v : ker) pts.emplace_back(Vec4{v[0], v[1], v[2], v[3]});
  return pts;
}

Rational plucker_relation(const Extensor& line) {
  if (line.grade() != 2) fail(ErrorKind::PreconditionViolated, "Plucker relation needs a grade-2 extensor");
  const auto& p = line.coeffs();  // 01 02 03 12 13 23
  return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
}

bool skew(const Extensor& l1, const Extensor& l2) {
  if (l1.grade() != 2 || l2.grade() != 2) fail(ErrorKind::PreconditionViolated, "skew test needs two lines");
  return sgn(join(l1, l2).scalar_value()) != 0;
}

Vec4 plane_form(const Extensor& plane) {
  if (plane.grade() != 3) fail(ErrorKind::PreconditionViolated, "plane form needs a grade-3 extensor");
  Vec4 h;
  for (int k = 0; k < 4; ++k) h[static_cast<std::size_t>(k)] = join(plane, Extensor::point(Point::basis(k))).scalar_value();
  return h;
}

Vec4 plane_form(const Point& a, const Point& b, const Point& c) {
  Vec4 h;
  for (int k = 0; k < 4; ++k) h[static_cast<std::size_t>(k)] = bracket(a.coords(), b.coords(), c.coords(), Point::basis(k).coords());
  return h;
}

Rational grassmann_criterion(const Point& x, const Extensor& l0, const Extensor& l1, const Extensor& l2) {
  if (!skew(l0, l1) || !skew(l0, l2) || !skew(l1, l2)) fail(ErrorKind::NotSkew, "Grassmann criterion needs three mutually skew lines");
  const Extensor xp = Extensor::point(x);
  return join(meet(join(xp, l0), l1), join(xp, l2)).scalar_value();
}

}  // namespace quadsyn
