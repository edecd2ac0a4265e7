#include <doctest.h>

#include "oracles.hpp"
#include "quadsyn/error.hpp"
#include "quadsyn/linalg.hpp"
#include "quadsyn/projective.hpp"

using namespace quadsyn;

TEST_CASE("rational parse and format") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(format_rational(parse_rational("10/5")) == "2");
  CHECK(format_rational(Rational(-3, 7)) == "-3/7");
  CHECK_THROWS_AS(parse_rational("1.5"), GeometryError);
  CHECK_THROWS_AS(parse_rational("3/0"), GeometryError);
  CHECK_THROWS_AS(parse_rational(""), GeometryError);
}

TEST_CASE("param arithmetic") {
  CHECK(Param(Rational(2)).reciprocal() == Param(Rational(1, 2)));
  CHECK(Param(Rational(0)).reciprocal() == Param::infinity());
  CHECK(Param::infinity().reciprocal() == Param(Rational(0)));
  CHECK_THROWS_AS(Param(Rational(0)) * Param::infinity(), GeometryError);
  CHECK((Param(Rational(3)) * Param::infinity()).is_infinite());
}

TEST_CASE("points are canonical") {
  const Point p(Rational(-2), Rational(4, 3), Rational(0), Rational(6));
  CHECK(p == Point(Rational(3), Rational(-2), Rational(0), Rational(-9)));
  CHECK(p.to_string() == "[3:-2:0:-9]");
  CHECK_THROWS_AS(Point(Vec4{0, 0, 0, 0}), GeometryError);
}

TEST_CASE("bracket examples") {
  CHECK(bracket(Point::basis(0), Point::basis(1), Point::basis(2), Point::basis(3)) == 1);
  CHECK(bracket(Point::basis(1), Point::basis(0), Point::basis(2), Point::basis(3)) == -1);
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const Vec4 a = oracles::rand_vec(rng), b = oracles::rand_vec(rng), c = oracles::rand_vec(rng),
               d = oracles::rand_vec(rng);
    CHECK(bracket(a, b, c, d) == oracles::bracket_cofactor(a, b, c, d));
  }
}

TEST_CASE("cross ratio") {
  const Param x = cross_ratio(Vec2{0, 1}, Vec2{1, 0}, Vec2{1, 1}, Vec2{1, 5});
  CHECK(x == Param(Rational(5)));
  CHECK(cross_ratio(Vec2{0, 1}, Vec2{1, 0}, Vec2{1, 1}, Vec2{1, 1}) == Param(Rational(1)));
  CHECK(cross_ratio(Vec2{0, 1}, Vec2{1, 0}, Vec2{1, 1}, Vec2{0, 1}).is_infinite());

  Rng rng(12);
  for (int k = 0; k < 30; ++k) {
    const Vec4 z = oracles::rand_vec(rng), i = oracles::rand_vec(rng);
    const Rational t = oracles::rand_nonzero(rng);
    const Point zero(z), inf(i), unit(z + i), p(z + t * i);
    if (zero == inf) continue;
    Point q1 = oracles::rand_point(rng), r1 = oracles::rand_point(rng);
    Point q2 = oracles::rand_point(rng), r2 = oracles::rand_point(rng);
    const Param a = cross_ratio(inf, zero, unit, p, q1, r1);
    const Param b = cross_ratio(inf, zero, unit, p, q2, r2);
    CHECK(a == b);
    CHECK(a == Param(t));
    CHECK(cross_ratio(inf, zero, unit, p) == Param(t));
  }
}

TEST_CASE("rank of points") {
  CHECK(rank_of_points({Point::basis(0), Point::basis(1), Point::basis(2)}) == 3);
  CHECK(rank_of_points({Point::basis(0), Point(Rational(2), Rational(0), Rational(0), Rational(0))}) == 1);
  Rng rng(13);
  for (int k = 0; k < 20; ++k) {
    const Vec4 a = oracles::rand_vec(rng), b = oracles::rand_vec(rng), c = oracles::rand_vec(rng);
    std::vector<Point> pts;
    for (int n = 0; n < 4; ++n) {
      pts.emplace_back(oracles::combo({{oracles::rand_nonzero(rng), a}, {oracles::rand_nonzero(rng), b},
                                       {oracles::rand_nonzero(rng), c}}));
    }
    CHECK(rank_of_points(pts) == 3);
  }
}

TEST_CASE("transforms") {
  const Point p(Rational(1), Rational(1), Rational(0), Rational(0));
  CHECK(ProjectiveTransform::identity().apply(p) == p);
  Mat4 d{};
  for (std::size_t i = 0; i < 4; ++i) d[i][i] = 1;
  d[1][1] = 2;
  CHECK(ProjectiveTransform(d).apply(p) == Point(Rational(1), Rational(2), Rational(0), Rational(0)));

  Rng rng(14);
  for (int k = 0; k < 30; ++k) {
    const auto t = random_transform(rng);
    const Vec4 a = oracles::rand_vec(rng), b = oracles::rand_vec(rng), c = oracles::rand_vec(rng),
               e = oracles::rand_vec(rng);
    CHECK(bracket(t.apply(a), t.apply(b), t.apply(c), t.apply(e)) == t.det() * bracket(a, b, c, e));
    const Point q(a);
    CHECK(t.inverse().apply(t.apply(q)) == q);
  }
  Mat4 z{};
  CHECK_THROWS_AS(ProjectiveTransform{z}, GeometryError);
}

TEST_CASE("determinants agree across methods") {
  Rng rng(15);
  for (int n = 1; n <= 6; ++n) {
    linalg::RatMatrix m(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    linalg::IntMatrix mi(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n)));
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < m.size(); ++c) {
        const auto v = rng.uniform(-9, 9);
        m[r][c] = Rational(static_cast<long>(v));
        mi[r][c] = Integer(static_cast<long>(v));
      }
    const Rational ref = oracles::leibniz_det(m);
    CHECK(linalg::determinant(m) == ref);
    CHECK(Rational(linalg::determinant_bareiss(mi)) == ref);
  }
}

TEST_CASE("kernel and rank") {
  linalg::RatMatrix m{{1, 2, 3}, {2, 4, 6}};
  CHECK(linalg::rank(m) == 1);
  const auto k = linalg::kernel(m, 3);
  REQUIRE(k.size() == 2);
  for (const auto& v : k) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
}
