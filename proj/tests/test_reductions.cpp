#include <doctest.h>

#include "oracles.hpp"
#include "quadsyn/error.hpp"
#include "quadsyn/fixtures.hpp"
#include "quadsyn/generic_case.hpp"
#include "quadsyn/reductions.hpp"

using namespace quadsyn;

namespace {

Point in_plane(Rng& rng, const Point& a, const Point& b, const Point& c) {
  return Point(oracles::combo({{oracles::rand_nonzero(rng), a.coords()},
                               {oracles::rand_nonzero(rng), b.coords()},
                               {oracles::rand_nonzero(rng), c.coords()}}));
}

Point circle_point(const Rational& t) {
  return Point(Rational(1 - t * t), Rational(2 * t), Rational(0), Rational(1 + t * t));
}

bool lines_skew(const std::vector<Point>& p, int a, int b, int c, int d) {
  return sgn(bracket(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)], p[static_cast<std::size_t>(c)],
                     p[static_cast<std::size_t>(d)])) != 0;
}

bool three_skew(const std::vector<Point>& p) {
  return lines_skew(p, 0, 1, 2, 3) && lines_skew(p, 0, 1, 4, 5) && lines_skew(p, 2, 3, 4, 5);
}

}  // namespace

TEST_CASE("duplicates") {
  auto pts = sample_generic(1, 10);
  CHECK_FALSE(qd_duplicates(pts).has_value());
  pts[1] = pts[0];
  const auto d = qd_duplicates(pts);
  REQUIRE(d.has_value());
  CHECK(d->on_quadric);
  CHECK(d->branch == Branch::Duplicate);
  CHECK(oracle_decide(pts));
  CHECK(certificate_vanishes(d->certificate, pts));
}

TEST_CASE("four collinear") {
  Rng rng(51);
  auto pts = sample_generic(2, 10);
  CHECK_FALSE(qd_four_collinear(pts).has_value());
  for (std::size_t k = 2; k < 4; ++k)
    pts[k] = Point(oracles::combo({{oracles::rand_nonzero(rng), pts[0].coords()}, {oracles::rand_nonzero(rng), pts[1].coords()}}));
  const auto d = qd_four_collinear(pts);
  REQUIRE(d.has_value());
  CHECK(d->on_quadric);
  CHECK(oracle_decide(pts));
}

TEST_CASE("six points on a plane conic") {
  auto pts = sample_generic(3, 10);
  const std::array<Rational, 6> ts{0, 1, 2, 3, Rational(1, 2), -1};
  for (std::size_t k = 0; k < 6; ++k) pts[k] = circle_point(ts[k]);
  const auto d = qd_six_on_plane_conic(pts);
  REQUIRE(d.has_value());
  CHECK(d->on_quadric);
  CHECK(d->branch == Branch::SixOnConic);
  CHECK(oracle_decide(pts));

  Rng rng(52);
  auto flat = sample_generic(4, 10);
  for (std::size_t k = 0; k < 6; ++k)
    flat[k] = Point(Rational(rng.uniform(-30, 30)), Rational(rng.uniform(-30, 30)), Rational(0), Rational(rng.uniform(1, 30)));
  CHECK(conic_determinant(plane_coordinates(std::span<const Point>(flat).first(6))) != 0);
  CHECK_FALSE(qd_six_on_plane_conic(flat).has_value());
}

TEST_CASE("hexagon on an ellipse has collinear Pascal points") {
  // Vertices of an affinely regular hexagon on x^2 - xy + y^2 = 1.
  const std::vector<Vec3> hex{{1, 0, 1}, {1, 1, 1}, {0, 1, 1}, {-1, 0, 1}, {-1, -1, 1}, {0, -1, 1}};
  CHECK(conic_determinant(hex) == 0);
  const auto pc = pascal_collinear(hex);
  REQUIRE(pc.has_value());
  CHECK(*pc);
  const std::vector<Vec3> off{{1, 0, 1}, {1, 1, 1}, {0, 1, 1}, {-1, 0, 1}, {-1, -1, 1}, {0, -2, 1}};
  CHECK(conic_determinant(off) != 0);
  const auto po = pascal_collinear(off);
  REQUIRE(po.has_value());
  CHECK_FALSE(*po);
}

TEST_CASE("three skew lines search") {
  Rng rng(53);
  const Point a = oracles::rand_point(rng), b = oracles::rand_point(rng), c = oracles::rand_point(rng);
  std::vector<Point> flat;
  for (int k = 0; k < 10; ++k) flat.push_back(in_plane(rng, a, b, c));
  const auto s = find_three_skew(flat);
  REQUIRE(s.decision.has_value());
  CHECK(s.decision->branch == Branch::Coplanar);
  CHECK(certificate_vanishes(s.decision->certificate, flat));

  const auto seg = sample_on_quadric(5, 10);
  const auto t = find_three_skew(seg);
  CHECK_FALSE(t.decision.has_value());
  CHECK(is_permutation(t.labeling));
  CHECK(three_skew(apply_labeling(seg, t.labeling)));

  const auto two = make_fixture("qd-branch:coplanar-with-two-lines", 3);
  const auto u = find_three_skew(two);
  REQUIRE(u.decision.has_value());
  CHECK(u.decision->branch == Branch::CoplanarWithTwoLines);
  CHECK(std::holds_alternative<PlanePair>(u.decision->certificate));
  CHECK(certificate_vanishes(u.decision->certificate, two));
  CHECK(oracle_decide(two));
}

TEST_CASE("three lines with three points each") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto pts = make_fixture("qd-branch:three-lines-grassmann", seed);
    const auto d = qd_three_lines(pts);
    REQUIRE(d.has_value());
    CHECK(d->branch == Branch::ThreeLinesGrassmann);
    CHECK(d->on_quadric == oracle_decide(pts));
    CHECK(d->on_quadric == (seed % 2 == 0));
  }
  // Three concurrent lines.
  Rng rng(54);
  const Point o = oracles::rand_point(rng);
  std::vector<Point> pts;
  for (int l = 0; l < 3; ++l) {
    const Point dir = oracles::rand_point(rng);
    for (int k = 0; k < 3; ++k)
      pts.emplace_back(oracles::combo({{1, o.coords()}, {oracles::rand_nonzero(rng), dir.coords()}}));
  }
  pts.push_back(oracles::rand_point(rng));
  const auto d = qd_three_lines(pts);
  REQUIRE(d.has_value());
  CHECK(d->on_quadric);
  CHECK(oracle_decide(pts));
}

TEST_CASE("two lines with three points each") {
  const std::array<int, 3> l1{0, 1, 6}, l2{2, 3, 7};
  const std::array<int, 4> rest{4, 5, 8, 9};
  for (const char* kind : {"qd-branch:shared-transversal", "qd-branch:plane-line-case", "qd-branch:two-lines-grassmann"}) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const auto pts = make_fixture(kind, seed);
      const Decision d = qd_two_lines(pts, l1, l2, rest);
      CHECK(std::string("qd-branch:") + std::string(to_string(d.branch)) == kind);
      CHECK(d.on_quadric == oracle_decide(pts));
    }
  }
  CHECK(qd_two_lines(make_fixture("qd-branch:shared-transversal", 1), l1, l2, rest).on_quadric);
  CHECK(qd_two_lines(make_fixture("qd-branch:two-lines-grassmann", 2), l1, l2, rest).on_quadric);
  CHECK_FALSE(qd_two_lines(make_fixture("qd-branch:two-lines-grassmann", 1), l1, l2, rest).on_quadric);
  CHECK_THROWS_AS(qd_two_lines(sample_generic(1, 10), l1, l2, rest), GeometryError);
}

TEST_CASE("skew swap") {
  const auto pts = make_fixture("case:C1", 1);
  const Labeling rel = skew_swap(pts, 0, 6, 7);
  CHECK(is_permutation(rel));
  const auto after = apply_labeling(pts, rel);
  CHECK(three_skew(after));
  CHECK(generic_preconditions(after));
  CHECK(decide_generic(after).on_quadric == oracle_decide(pts));

  // Pierce point of 01 on line 67.
  const auto b4 = make_fixture("case:B4", 1);
  CHECK_THROWS_AS(skew_swap(b4, 0, 6, 7), GeometryError);
}

TEST_CASE("split skew") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto pts = make_fixture(seed % 2 ? "case:C4b" : "case:B3c", seed);
    const Extensor plane = join(pts[6], pts[7], pts[8]);
    const SplitResult r = split_skew(pts, plane);
    const auto after = apply_labeling(pts, r.relabel);
    CHECK(three_skew(after));
    const Point g = meet(join(pts[2], pts[3]), plane).to_point();
    const Point h = meet(join(pts[4], pts[5]), plane).to_point();
    CHECK(meet(join(after[2], after[3]), plane).to_point() == r.g_prime);
    CHECK(meet(join(after[4], after[5]), plane).to_point() == r.h_prime);
    CHECK_FALSE(collinear(r.g_prime, g, h));
    CHECK_FALSE(collinear(r.h_prime, g, h));
  }
  // Generic position: both recombinations work and the first is taken.
  Rng rng(55);
  const auto pts = sample_generic(6, 10);
  const Extensor plane = join(oracles::rand_point(rng), oracles::rand_point(rng), oracles::rand_point(rng));
  CHECK(split_skew(pts, plane).alternative == SplitAlternative::CE_DF);
}

TEST_CASE("normalize") {
  Rng rng(56);
  auto pts = sample_generic(7, 10);
  for (std::size_t k = 7; k < 10; ++k)
    pts[k] = Point(oracles::combo({{oracles::rand_nonzero(rng), pts[6].coords()}, {1, pts[0].coords() + pts[6].coords()}}));
  const Normalized a = normalize(pts);
  REQUIRE(a.decision.has_value());
  CHECK(a.decision->on_quadric);
  CHECK(oracle_decide(pts));

  const auto c4b = make_fixture("case:C4b", 2);
  const Normalized n = normalize(c4b);
  REQUIRE_FALSE(n.decision.has_value());
  bool split = false;
  for (const auto& r : n.route) split = split || r.starts_with("split-skew");
  CHECK(split);
  CHECK(decide_generic(apply_labeling(c4b, n.labeling)).on_quadric == oracle_decide(c4b));

  const auto seg = sample_on_quadric(8, 10);
  const Normalized g = normalize(seg);
  REQUIRE_FALSE(g.decision.has_value());
  CHECK(decide_generic(apply_labeling(seg, g.labeling)).on_quadric);
}
