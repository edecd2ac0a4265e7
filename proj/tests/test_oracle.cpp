#include <doctest.h>

#include "oracles.hpp"
#include "quadsyn/linalg.hpp"
#include "quadsyn/oracle.hpp"

using namespace quadsyn;

TEST_CASE("veronese rows") {
  using Row = std::array<Rational, 10>;
  CHECK(veronese_row(Point::basis(0)) == Row{1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
  CHECK(veronese_row(Point(Rational(1), Rational(1), Rational(1), Rational(1))) == Row{1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  CHECK(veronese_row(Point(Rational(1), Rational(2), Rational(3), Rational(4))) == Row{1, 2, 3, 4, 4, 6, 8, 9, 12, 16});
}

TEST_CASE("oracle decisions") {
  CHECK(oracle_decide(sample_on_quadric(1, 10, false)));
  CHECK(oracle_decide(sample_on_quadric(2, 10)));
  auto nine = sample_on_quadric(3, 10);
  nine[9] = Point(Rational(1), Rational(1), Rational(1), Rational(0));
  CHECK_FALSE(oracle_decide(nine));
  CHECK(quadric_through(std::span<const Point>(nine).first(9)).size() == 1);
  auto dup = sample_generic(4, 10);
  dup[3] = dup[8];
  CHECK(oracle_decide(dup));
}

TEST_CASE("det(N) agrees with Gaussian elimination on rational rows") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto pts = sample_generic(seed, 10, {30, 5});
    linalg::RatMatrix n;
    for (const auto& p : pts) {
      const auto row = veronese_row(p);
      n.emplace_back(row.begin(), row.end());
    }
    CHECK(Rational(det_N(pts)) == linalg::determinant(n));
  }
}

TEST_CASE("quadrics through few points") {
  CHECK(quadric_through(std::vector<Point>{}).size() == 10);
  CHECK(quadric_through(sample_generic(5, 9)).size() == 1);
  // Six points with 01, 23, 45 skew.
  const auto six = sample_generic(6, 6);
  const auto k = quadric_through(six);
  CHECK(k.size() == 4);
  for (const auto& q : k) CHECK(vanishes_on(q, six));
}

TEST_CASE("product of forms") {
  const Vec4 h1{1, 0, 0, 0}, h2{0, 1, 0, 0};
  const QuadricCoeffs q = product_of_forms(h1, h2);
  CHECK(q == QuadricCoeffs{0, 1, 0, 0, 0, 0, 0, 0, 0, 0});
}

TEST_CASE("samplers are reproducible") {
  CHECK(sample_on_quadric(9, 10) == sample_on_quadric(9, 10));
  CHECK(sample_generic(9, 10) == sample_generic(9, 10));
  CHECK_FALSE(sample_generic(9, 10) == sample_generic(10, 10));
  int no = 0;
  for (std::uint64_t s = 0; s < 20; ++s) no += oracle_decide(sample_generic(s, 10)) ? 0 : 1;
  CHECK(no == 20);
  Rng a(77), b(77);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng r(5);
  for (int i = 0; i < 1000; ++i) {
    const auto v = r.uniform(-3, 4);
    CHECK(v >= -3);
    CHECK(v <= 4);
  }
}
