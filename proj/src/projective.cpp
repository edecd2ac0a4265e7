#include "quadsyn/projective.hpp"

#include "quadsyn/error.hpp"
#include "quadsyn/linalg.hpp"

namespace quadsyn {

Vec4 operator+(const Vec4& a, const Vec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
Vec4 operator-(const Vec4& a, const Vec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
Vec4 operator*(const Rational& s, const Vec4& v) { return {s * v[0], s * v[1], s * v[2], s * v[3]}; }

bool is_zero(const Vec4& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

Vec4 canonical(const Vec4& raw) {
  if (is_zero(raw)) fail(ErrorKind::ZeroVector, "point with all coordinates zero");
  Integer l = 1;
  for (const auto& x : raw) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::array<Integer, 4> ints;
  Integer g = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    ints[i] = raw[i].get_num() * (l / raw[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  std::size_t lead = 0;
  while (sgn(ints[lead]) == 0) ++lead;
  if (sgn(ints[lead]) < 0) g = -g;
  Vec4 out;
  for (std::size_t i = 0; i < 4; ++i) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), ints[i].get_mpz_t(), g.get_mpz_t());
    out[i] = Rational(q);
  }
  return out;
}

Point::Point(const Vec4& raw) : coords_(canonical(raw)) {}

Point Point::basis(int i) {
  Vec4 v{0, 0, 0, 0};
  v.at(static_cast<std::size_t>(i)) = 1;
  return Point(v);
}

bool operator<(const Point& a, const Point& b) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (a.coords_[i] != b.coords_[i]) return a.coords_[i] < b.coords_[i];
  }
  return false;
}

std::string Point::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < 4; ++i) {
    if (i) s += ':';
    s += format_rational(coords_[i]);
  }
  return s + "]";
}

Rational bracket(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) {
  // Laplace expansion along the first two columns.
  auto m2 = [](const Vec4& u, const Vec4& v, int i, int j) { return Rational(u[i] * v[j] - u[j] * v[i]); };
  return m2(a, b, 0, 1) * m2(c, d, 2, 3) - m2(a, b, 0, 2) * m2(c, d, 1, 3) + m2(a, b, 0, 3) * m2(c, d, 1, 2) +
         m2(a, b, 1, 2) * m2(c, d, 0, 3) - m2(a, b, 1, 3) * m2(c, d, 0, 2) + m2(a, b, 2, 3) * m2(c, d, 0, 1);
}

int rank_of_vectors(std::span<const Vec4> vs) {
  linalg::RatMatrix m;
  for (const auto& v : vs) m.emplace_back(v.begin(), v.end());
  return linalg::rank(std::move(m));
}

int rank_of_points(std::span<const Point> pts) {
  std::vector<Vec4> vs;
  vs.reserve(pts.size());
  for (const auto& p : pts) vs.push_back(p.coords());
  return rank_of_vectors(vs);
}

int rank_of_points(std::initializer_list<Point> pts) {
  return rank_of_points(std::span<const Point>(pts.begin(), pts.size()));
}

bool collinear(const Point& a, const Point& b, const Point& c) { return rank_of_points({a, b, c}) <= 2; }
bool coplanar(const Point& a, const Point& b, const Point& c, const Point& d) {
  return sgn(bracket(a, b, c, d)) == 0;
}

namespace {

template <std::size_t N>
Rational det_columns(const std::array<const std::array<Rational, N>*, N>& cols) {
  linalg::RatMatrix m(N, std::vector<Rational>(N));
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) m[r][c] = (*cols[c])[r];
  }
  return linalg::determinant(std::move(m));
}

template <std::size_t N>
int rank_n(std::initializer_list<const std::array<Rational, N>*> vs) {
  linalg::RatMatrix m;
  for (const auto* v : vs) m.emplace_back(v->begin(), v->end());
  return linalg::rank(std::move(m));
}

template <std::size_t N>
void check_line_quadruple(const std::array<Rational, N>& a, const std::array<Rational, N>& b,
                          const std::array<Rational, N>& c, const std::array<Rational, N>& d) {
  if (rank_n<N>({&a, &b}) < 2 || rank_n<N>({&a, &c}) < 2 || rank_n<N>({&b, &c}) < 2) {
    fail(ErrorKind::CoincidentPoints, "cross ratio needs three distinct reference points");
  }
  if (rank_n<N>({&a, &b, &c, &d}) > 2) fail(ErrorKind::NotCollinear, "cross ratio of non-collinear points");
}

Param ratio(const Rational& num, const Rational& den) {
  if (sgn(den) == 0) return Param::infinity();
  return Param(Rational(num / den));
}

}  // namespace

Param cross_ratio(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
  check_line_quadruple<2>(a, b, c, d);
  auto br = [](const Vec2& u, const Vec2& v) { return Rational(u[0] * v[1] - u[1] * v[0]); };
  return ratio(br(a, c) * br(b, d), br(a, d) * br(b, c));
}

Param cross_ratio(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d, const Vec3& q) {
  check_line_quadruple<3>(a, b, c, d);
  auto br = [&q](const Vec3& u, const Vec3& v) { return det_columns<3>({&u, &v, &q}); };
  if (sgn(br(a, b)) == 0) fail(ErrorKind::DegenerateWitness, "witness lies on the line");
  return ratio(br(a, c) * br(b, d), br(a, d) * br(b, c));
}

Param cross_ratio(const Point& a, const Point& b, const Point& c, const Point& d, const Point& q,
                  const Point& r) {
  check_line_quadruple<4>(a.coords(), b.coords(), c.coords(), d.coords());
  if (sgn(bracket(a, b, q, r)) == 0) fail(ErrorKind::DegenerateWitness, "witnesses do not complement the line");
  auto br = [&](const Point& u, const Point& v) { return bracket(u, v, q, r); };
  return ratio(br(a, c) * br(b, d), br(a, d) * br(b, c));
}

Param cross_ratio(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (a == b) fail(ErrorKind::CoincidentPoints, "cross ratio needs three distinct reference points");
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const Point q = Point::basis(i);
      const Point r = Point::basis(j);
      if (sgn(bracket(a, b, q, r)) != 0) return cross_ratio(a, b, c, d, q, r);
    }
  }
  fail(ErrorKind::InternalInconsistency, "no coordinate witnesses complement the line");
}

Rational determinant(const Mat4& m) {
  const Vec4 c0{m[0][0], m[1][0], m[2][0], m[3][0]};
  const Vec4 c1{m[0][1], m[1][1], m[2][1], m[3][1]};
  const Vec4 c2{m[0][2], m[1][2], m[2][2], m[3][2]};
  const Vec4 c3{m[0][3], m[1][3], m[2][3], m[3][3]};
  return bracket(c0, c1, c2, c3);
}

ProjectiveTransform::ProjectiveTransform(const Mat4& m) : m_(m), det_(determinant(m)) {
  if (sgn(det_) == 0) fail(ErrorKind::Singular, "projective transform with zero determinant");
}

ProjectiveTransform ProjectiveTransform::identity() {
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = i == j ? 1 : 0;
  }
  return ProjectiveTransform(m);
}

ProjectiveTransform ProjectiveTransform::from_columns(const std::array<Vec4, 4>& columns) {
  Mat4 m;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m[i][j] = columns[j][i];
  }
  return ProjectiveTransform(m);
}

Vec4 ProjectiveTransform::apply(const Vec4& v) const {
  Vec4 out;
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = m_[i][0] * v[0] + m_[i][1] * v[1] + m_[i][2] * v[2] + m_[i][3] * v[3];
  }
  return out;
}

ProjectiveTransform ProjectiveTransform::inverse() const {
  linalg::RatMatrix aug(4, std::vector<Rational>(8, Rational(0)));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) aug[i][j] = m_[i][j];
    aug[i][4 + i] = 1;
  }
  // The kernel of [m | I] is spanned by columns (-x_k ; e_k) where m x_k = e_k.
  const auto ker = linalg::kernel(aug, 8);
  Mat4 inv;
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t i = 0; i < 4; ++i) inv[i][k] = -ker[k][i];
  }
  return ProjectiveTransform(inv);
}

}  // namespace quadsyn
