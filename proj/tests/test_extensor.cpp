#include <doctest.h>

#include "oracles.hpp"
#include "quadsyn/error.hpp"
#include "quadsyn/extensor.hpp"
#include "quadsyn/oracle.hpp"

using namespace quadsyn;

namespace {

Extensor e(int i) { return Extensor::point(Point::basis(i)); }

Extensor random_extensor(Rng& rng, int grade) {
  std::vector<Rational> c;
  for (std::size_t k = 0; k < subsets_of_grade(grade).size(); ++k) c.push_back(rng.rational(9, 3));
  return Extensor(grade, c);
}

}  // namespace

TEST_CASE("join examples") {
  const Extensor l = join(e(0), e(1));
  REQUIRE(l.grade() == 2);
  CHECK(l.coeffs() == std::vector<Rational>{1, 0, 0, 0, 0, 0});
  CHECK(join(e(2), e(2)).is_zero());
  const Extensor s = join(join(join(e(0), e(1)), e(2)), e(3));
  CHECK(s.grade() == 4);
  CHECK(s.scalar_value() == 1);
  CHECK_THROWS_AS(join(s, e(0)), GeometryError);
}

TEST_CASE("meet examples") {
  const Extensor m = meet(join(e(0), e(1)), join(join(e(1), e(2)), e(3)));
  REQUIRE(m.grade() == 1);
  CHECK(m.to_vector() == Vec4{0, 1, 0, 0});
  const Extensor plane = join(join(e(0), e(1)), e(2));
  CHECK(meet(join(e(0), e(1)), plane).is_zero());

  Rng rng(21);
  for (int k = 0; k < 20; ++k) {
    const Point a = oracles::rand_point(rng), b = oracles::rand_point(rng), c = oracles::rand_point(rng),
                d = oracles::rand_point(rng), f = oracles::rand_point(rng), g = oracles::rand_point(rng);
    const Vec4 h1 = plane_form(a, b, c), h2 = plane_form(d, f, g);
    const Extensor line = meet(join(a, b, c), join(d, f, g));
    REQUIRE(line.grade() == 2);
    for (const Point& p : support_basis(line)) {
      Rational s1 = 0, s2 = 0;
      for (std::size_t i = 0; i < 4; ++i) {
        s1 += h1[i] * p[i];
        s2 += h2[i] * p[i];
      }
      CHECK(sgn(s1) == 0);
      CHECK(sgn(s2) == 0);
    }
    CHECK(plucker_relation(line) == 0);
  }
}

TEST_CASE("meet of line and plane expands by brackets") {
  Rng rng(22);
  for (int k = 0; k < 30; ++k) {
    const Point p = oracles::rand_point(rng), q = oracles::rand_point(rng), r = oracles::rand_point(rng),
                s = oracles::rand_point(rng), t = oracles::rand_point(rng);
    const Extensor m = meet(join(p, q), join(r, s, t));
    const Vec4 want = oracles::combo({{oracles::bracket_cofactor(p, r, s, t), q.coords()},
                                      {-oracles::bracket_cofactor(q, r, s, t), p.coords()}});
    CHECK(m.to_vector() == want);
  }
}

TEST_CASE("graded anticommutativity and associativity") {
  Rng rng(23);
  for (int k = 0; k < 30; ++k) {
    for (int ga = 1; ga <= 3; ++ga) {
      for (int gb = 1; ga + gb <= 4; ++gb) {
        const Extensor a = random_extensor(rng, ga), b = random_extensor(rng, gb);
        const Rational sign = (ga * gb) % 2 == 0 ? 1 : -1;
        CHECK(join(a, b) == join(b, a) * sign);
      }
    }
    const Extensor a = random_extensor(rng, 1), b = random_extensor(rng, 2), c = random_extensor(rng, 1);
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
  }
}

TEST_CASE("support basis") {
  const Point p(Rational(1), Rational(2), Rational(3), Rational(4));
  const auto one = support_basis(Extensor::point(p));
  REQUIRE(one.size() == 1);
  CHECK(one[0] == p);
  const auto two = support_basis(join(e(0), e(1)));
  REQUIRE(two.size() == 2);
  for (const auto& q : two) CHECK((sgn(q[2]) == 0 && sgn(q[3]) == 0));
  Rng rng(24);
  for (int k = 0; k < 30; ++k) {
    const Extensor l = join(oracles::rand_point(rng), oracles::rand_point(rng));
    const auto b = support_basis(l);
    REQUIRE(b.size() == 2);
    const Extensor back = join(b[0], b[1]);
    // Equal up to a nonzero scale.
    std::size_t lead = 0;
    while (sgn(l.coeffs()[lead]) == 0) ++lead;
    CHECK(back * (l.coeffs()[lead] / back.coeffs()[lead]) == l);
  }
  CHECK_THROWS_AS(support_basis(Extensor::zero(2)), GeometryError);
}

TEST_CASE("skew lines") {
  CHECK(skew(join(e(0), e(1)), join(e(2), e(3))));
  CHECK_FALSE(skew(join(e(0), e(1)), join(e(1), e(3))));
}

TEST_CASE("grassmann criterion on segre rulings") {
  auto ruling = [](int s) {
    return join(Point(Rational(1), Rational(s), Rational(0), Rational(0)),
                Point(Rational(0), Rational(0), Rational(1), Rational(s)));
  };
  const Extensor l0 = ruling(0), l1 = ruling(1), l2 = ruling(2);
  const Point on(Rational(1), Rational(3), Rational(5), Rational(15));
  const Point off(Rational(1), Rational(1), Rational(1), Rational(0));
  CHECK(grassmann_criterion(on, l0, l1, l2) == 0);
  CHECK(grassmann_criterion(off, l0, l1, l2) != 0);
  CHECK(grassmann_criterion(Point(Rational(1), Rational(0), Rational(0), Rational(0)), l0, l1, l2) == 0);
  const QuadricCoeffs segre{0, 0, 0, 1, 0, -1, 0, 0, 0, 0};
  CHECK(evaluate(segre, on) == 0);
  CHECK(evaluate(segre, off) != 0);
  CHECK_THROWS_AS(grassmann_criterion(on, l0, l0, l2), GeometryError);
}
