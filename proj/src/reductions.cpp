#include "quadsyn/reductions.hpp"

#include <algorithm>
#include <numeric>

#include "quadsyn/error.hpp"
#include "quadsyn/generic_case.hpp"
#include "quadsyn/linalg.hpp"

namespace quadsyn {

namespace {

using Pts = std::vector<Point>;

const Point& at(std::span<const Point> p, int i) { return p[static_cast<std::size_t>(i)]; }

Decision yes(Branch b, Certificate c, std::string route) {
  Decision d;
  d.on_quadric = true;
  d.branch = b;
  d.certificate = std::move(c);
  d.route.push_back(std::move(route));
  return d;
}

Decision no(Branch b, std::string route) {
  Decision d;
  d.on_quadric = false;
  d.branch = b;
  d.route.push_back(std::move(route));
  return d;
}

Extensor line_of(std::span<const Point> p, int i, int j) { return join(at(p, i), at(p, j)); }

bool on_line(const Point& x, const Point& a, const Point& b) { return collinear(a, b, x); }

bool skew_lines(const Extensor& a, const Extensor& b) { return sgn(join(a, b).scalar_value()) != 0; }

// Plane through the first three independent points of the list.
std::optional<Extensor> plane_through(std::span<const Point> p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      for (std::size_t k = j + 1; k < p.size(); ++k) {
        Extensor e = join(p[i], p[j], p[k]);
        if (!e.is_zero()) return e;
      }
  return std::nullopt;
}

Rational det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// pq meet rs in the plane: [prs]q - [qrs]p.
std::optional<Vec3> meet2(const Vec3& p, const Vec3& q, const Vec3& r, const Vec3& s) {
  const Rational u = det3(p, r, s);
  const Rational v = det3(q, r, s);
  Vec3 out{u * q[0] - v * p[0], u * q[1] - v * p[1], u * q[2] - v * p[2]};
  if (sgn(out[0]) == 0 && sgn(out[1]) == 0 && sgn(out[2]) == 0) return std::nullopt;
  return out;
}

// Relative relabeling moving line t to roles 01, the others after it.
Labeling line_first(int t) {
  Labeling rel = identity_labeling();
  std::array<int, 3> order{t, -1, -1};
  int n = 1;
  for (int l = 0; l < 3; ++l) {
    if (l != t) order[static_cast<std::size_t>(n++)] = l;
  }
  for (std::size_t s = 0; s < 3; ++s) {
    rel[2 * s] = 2 * order[s];
    rel[2 * s + 1] = 2 * order[s] + 1;
  }
  return rel;
}

Labeling swap_lines_12() {
  Labeling rel = identity_labeling();
  std::swap(rel[2], rel[4]);
  std::swap(rel[3], rel[5]);
  return rel;
}

// Relative relabeling putting old roles order[0..3] at roles 6..9.
Labeling plane_order(const std::array<int, 4>& order) {
  Labeling rel = identity_labeling();
  for (std::size_t n = 0; n < 4; ++n) rel[6 + n] = order[n];
  return rel;
}

std::array<int, 2> opposite(int i, int j) {
  std::array<int, 2> o{};
  int n = 0;
  for (int k = 6; k <= 9; ++k) {
    if (k != i && k != j) o[static_cast<std::size_t>(n++)] = k;
  }
  return o;
}

struct DeadEnd {
  std::string why;
};

// Working state: labeling of the original points and the points in role order.
struct State {
  std::span<const Point> orig;
  Labeling lab = identity_labeling();
  Pts cur;
  std::vector<std::string> route;

  void relabel(const Labeling& rel) {
    lab = compose(lab, rel);
    cur = apply_labeling(orig, lab);
  }
  const Point& P(int role) const { return cur[static_cast<std::size_t>(role)]; }
};

bool generic_ready(const Pts& p) {
  return sgn(bracket(p[0], p[1], p[2], p[3])) != 0 && sgn(bracket(p[0], p[1], p[4], p[5])) != 0 &&
         sgn(bracket(p[2], p[3], p[4], p[5])) != 0 && sgn(bracket(p[6], p[7], p[8], p[9])) != 0;
}

Decision with_context(Decision d, const State& s) {
  d.labeling = s.lab;
  std::vector<std::string> r = s.route;
  r.insert(r.end(), d.route.begin(), d.route.end());
  d.route = std::move(r);
  return d;
}

}  // namespace

std::optional<Decision> qd_duplicates(std::span<const Point> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) {
        return yes(Branch::Duplicate, kernel_certificate(pts), "duplicate:" + std::to_string(i) + "=" + std::to_string(j));
      }
    }
  }
  return std::nullopt;
}

std::optional<Decision> qd_four_collinear(std::span<const Point> pts) {
  const int n = static_cast<int>(pts.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        if (!collinear(at(pts, a), at(pts, b), at(pts, c))) continue;
        for (int d = c + 1; d < n; ++d) {
          if (collinear(at(pts, a), at(pts, b), at(pts, d))) {
            return yes(Branch::FourCollinear, kernel_certificate(pts),
                       "four-collinear:" + std::to_string(a) + std::to_string(b) + std::to_string(c) + std::to_string(d));
          }
        }
      }
  return std::nullopt;
}

std::vector<Vec3> plane_coordinates(std::span<const Point> pts) {
  const auto plane = plane_through(pts);
  if (!plane) fail(ErrorKind::Degenerate, "points do not span a plane");
  const Vec4 h = plane_form(*plane);
  std::size_t drop = 0;
  while (sgn(h[drop]) == 0) ++drop;
  std::vector<Vec3> out;
  for (const auto& p : pts) {
    if (sgn(h[0] * p[0] + h[1] * p[1] + h[2] * p[2] + h[3] * p[3]) != 0) {
      fail(ErrorKind::PreconditionViolated, "points are not coplanar");
    }
    Vec3 v;
    std::size_t n = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      if (k != drop) v[n++] = p[k];
    }
    out.push_back(v);
  }
  return out;
}

Rational conic_determinant(std::span<const Vec3> six) {
  if (six.size() != 6) fail(ErrorKind::PreconditionViolated, "conic determinant needs six points");
  linalg::RatMatrix m;
  for (const auto& v : six) {
    m.push_back({v[0] * v[0], v[0] * v[1], v[0] * v[2], v[1] * v[1], v[1] * v[2], v[2] * v[2]});
  }
  return linalg::determinant(std::move(m));
}

std::optional<bool> pascal_collinear(std::span<const Vec3> s) {
  if (s.size() != 6) fail(ErrorKind::PreconditionViolated, "Pascal check needs six points");
  const auto p1 = meet2(s[0], s[5], s[2], s[3]);
  const auto p2 = meet2(s[0], s[1], s[3], s[4]);
  const auto p3 = meet2(s[4], s[5], s[1], s[2]);
  if (!p1 || !p2 || !p3) return std::nullopt;
  return sgn(det3(*p1, *p2, *p3)) == 0;
}

std::optional<Decision> qd_six_on_plane_conic(std::span<const Point> pts) {
  const int n = static_cast<int>(pts.size());
  std::array<int, 6> idx{};
  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + std::min(n, 6), true);
  if (n < 6) return std::nullopt;
  do {
    std::size_t k = 0;
    for (int i = 0; i < n; ++i) {
      if (pick[static_cast<std::size_t>(i)]) idx[k++] = i;
    }
    Pts six;
    for (int i : idx) six.push_back(at(pts, i));
    if (rank_of_points(six) > 3) continue;
    const auto planar = plane_coordinates(six);
    if (sgn(conic_determinant(planar)) != 0) continue;
    std::string tag = "six-on-conic:";
    for (int i : idx) tag += std::to_string(i);
    Decision d = yes(Branch::SixOnConic, kernel_certificate(pts), tag);
    const auto pascal = pascal_collinear(planar);
    d.route.push_back(!pascal ? "pascal-degenerate" : (*pascal ? "pascal-agrees" : "pascal-disagrees"));
    return d;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return std::nullopt;
}

std::optional<Decision> qd_three_lines(std::span<const Point> pts) {
  if (pts.size() != 10) return std::nullopt;
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b)
      for (int c = b + 1; c < 10; ++c) {
        if (collinear(at(pts, a), at(pts, b), at(pts, c))) triples.push_back({a, b, c});
      }
  auto mask = [](const std::array<int, 3>& t) { return (1u << t[0]) | (1u << t[1]) | (1u << t[2]); };
  for (std::size_t i = 0; i < triples.size(); ++i)
    for (std::size_t j = i + 1; j < triples.size(); ++j) {
      if (mask(triples[i]) & mask(triples[j])) continue;
      for (std::size_t k = j + 1; k < triples.size(); ++k) {
        const unsigned used = mask(triples[i]) | mask(triples[j]) | mask(triples[k]);
        if (std::popcount(used) != 9) continue;
        const int x = std::countr_zero(~used & 0x3ffu);
        const std::array<Extensor, 3> lines{line_of(pts, triples[i][0], triples[i][1]), line_of(pts, triples[j][0], triples[j][1]),
                                            line_of(pts, triples[k][0], triples[k][1])};
        std::string tag = "three-lines:";
        for (const auto* t : {&triples[i], &triples[j], &triples[k]}) tag += std::to_string((*t)[0]) + std::to_string((*t)[1]) + std::to_string((*t)[2]) + "/";
        tag += std::to_string(x);
        if (!skew_lines(lines[0], lines[1]) || !skew_lines(lines[0], lines[2]) || !skew_lines(lines[1], lines[2])) {
          return yes(Branch::SixOnConic, kernel_certificate(pts), tag + ":meeting");
        }
        if (sgn(grassmann_criterion(at(pts, x), lines[0], lines[1], lines[2])) == 0) {
          return yes(Branch::ThreeLinesGrassmann, kernel_certificate(pts), tag);
        }
        return no(Branch::ThreeLinesGrassmann, tag);
      }
    }
  return std::nullopt;
}

Decision qd_two_lines(std::span<const Point> pts, const std::array<int, 3>& l1, const std::array<int, 3>& l2,
                      const std::array<int, 4>& rest) {
  for (const auto* l : {&l1, &l2}) {
    if (!collinear(at(pts, (*l)[0]), at(pts, (*l)[1]), at(pts, (*l)[2]))) {
      fail(ErrorKind::PreconditionViolated, "two-lines: a triple is not collinear");
    }
  }
  const Extensor line1 = line_of(pts, l1[0], l1[1]);
  const Extensor line2 = line_of(pts, l2[0], l2[1]);
  if (line1.is_zero() || line2.is_zero() || !skew_lines(line1, line2)) {
    fail(ErrorKind::PreconditionViolated, "two-lines: the lines are not skew");
  }
  struct Transversal {
    Point p, foot1, foot2;
    Extensor line;
  };
  std::array<std::optional<Transversal>, 4> tr;
  for (std::size_t n = 0; n < 4; ++n) {
    const Point& p = at(pts, rest[n]);
    const Extensor ep = Extensor::point(p);
    if (join(line1, ep).is_zero() || join(line2, ep).is_zero()) {
      fail(ErrorKind::PreconditionViolated, "two-lines: a remaining point lies on a line");
    }
    const Point foot2 = meet(join(ep, line1), line2).to_point();
    const Point foot1 = meet(join(ep, line2), line1).to_point();
    tr[n] = Transversal{p, foot1, foot2, join(p, foot2)};
  }
  const Point& x = at(pts, rest[3]);

  static constexpr std::array<std::array<int, 3>, 3> kPairs{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (const auto& [i, j, k] : kPairs) {
    const auto& ti = *tr[static_cast<std::size_t>(i)];
    const auto& tj = *tr[static_cast<std::size_t>(j)];
    if (ti.foot1 == tj.foot1 && ti.foot2 == tj.foot2) return yes(Branch::SharedTransversal, kernel_certificate(pts), "shared-transversal");
  }
  for (const auto& [i, j, k] : kPairs) {
    const auto& ti = *tr[static_cast<std::size_t>(i)];
    const auto& tj = *tr[static_cast<std::size_t>(j)];
    if (skew_lines(ti.line, tj.line)) continue;
    const bool on_l1 = ti.foot1 == tj.foot1;
    if (!on_l1 && !(ti.foot2 == tj.foot2)) fail(ErrorKind::InternalInconsistency, "transversals meet off both lines");
    const Point r = on_l1 ? ti.foot1 : ti.foot2;
    const std::array<int, 3>& rl = on_l1 ? l1 : l2;
    const Point& c = tr[static_cast<std::size_t>(k)]->p;
    const Vec4 abr = plane_form(ti.p, tj.p, r);
    auto in_abr = [&](const Point& q) { return sgn(bracket(ti.p, tj.p, r, q)) == 0; };
    const Point& r0 = at(pts, rl[0]);
    const Point& r1 = at(pts, rl[1]);
    if (in_abr(c)) return yes(Branch::PlaneLineCase, PlanePair{abr, plane_form(r0, r1, x)}, "plane-line-case:c-in-abr");
    if (in_abr(x)) return yes(Branch::PlaneLineCase, PlanePair{abr, plane_form(r0, r1, c)}, "plane-line-case:x-in-abr");
    if (coplanar(r0, r1, c, x)) return yes(Branch::PlaneLineCase, PlanePair{abr, plane_form(r0, r1, c)}, "plane-line-case:cx-line");
    return no(Branch::PlaneLineCase, "plane-line-case");
  }
  if (sgn(grassmann_criterion(x, tr[0]->line, tr[1]->line, tr[2]->line)) == 0) {
    return yes(Branch::TwoLinesGrassmann, kernel_certificate(pts), "two-lines-grassmann");
  }
  return no(Branch::TwoLinesGrassmann, "two-lines-grassmann");
}

SkewSearch find_three_skew(std::span<const Point> pts) {
  if (pts.size() != 10) fail(ErrorKind::PreconditionViolated, "need ten points");
  SkewSearch out;
  int i0 = -1, j0 = -1, k0 = -1, l0 = -1;
  for (int i = 0; i < 10 && i0 < 0; ++i)
    for (int j = i + 1; j < 10 && i0 < 0; ++j)
      for (int k = i + 1; k < 10 && i0 < 0; ++k) {
        if (k == j) continue;
        for (int l = k + 1; l < 10; ++l) {
          if (l == j) continue;
          if (sgn(bracket(at(pts, i), at(pts, j), at(pts, k), at(pts, l))) != 0) {
            i0 = i, j0 = j, k0 = k, l0 = l;
            break;
          }
        }
      }
  if (i0 < 0) {
    const auto plane = plane_through(pts);
    if (!plane) fail(ErrorKind::PreconditionViolated, "points are collinear");
    const Vec4 h = plane_form(*plane);
    out.decision = yes(Branch::Coplanar, PlanePair{h, h}, "coplanar");
    return out;
  }
  std::vector<int> order{i0, j0, k0, l0};
  std::vector<int> remaining;
  for (int n = 0; n < 10; ++n) {
    if (std::find(order.begin(), order.end(), n) == order.end()) remaining.push_back(n);
  }
  const Extensor la = line_of(pts, i0, j0);
  const Extensor lb = line_of(pts, k0, l0);
  auto off_both = [&](int n) {
    const Extensor e = Extensor::point(at(pts, n));
    return !join(la, e).is_zero() && !join(lb, e).is_zero();
  };
  auto it4 = std::find_if(remaining.begin(), remaining.end(), off_both);
  if (it4 == remaining.end()) {
    out.decision = yes(Branch::FourCollinear, kernel_certificate(pts), "two-lines-hold-all");
    return out;
  }
  const int p4 = *it4;
  remaining.erase(it4);
  int p5 = -1;
  for (int n : remaining) {
    const Extensor l = line_of(pts, p4, n);
    if (skew_lines(l, la) && skew_lines(l, lb)) {
      p5 = n;
      break;
    }
  }
  if (p5 < 0) {
    out.decision = yes(Branch::CoplanarWithTwoLines,
                       PlanePair{plane_form(at(pts, i0), at(pts, j0), at(pts, p4)), plane_form(at(pts, k0), at(pts, l0), at(pts, p4))},
                       "coplanar-with-two-lines");
    out.decision->labeling = identity_labeling();
    return out;
  }
  remaining.erase(std::find(remaining.begin(), remaining.end(), p5));
  order.push_back(p4);
  order.push_back(p5);
  order.insert(order.end(), remaining.begin(), remaining.end());
  std::copy(order.begin(), order.end(), out.labeling.begin());
  return out;
}

Labeling skew_swap(std::span<const Point> pts, int line, int i, int j) {
  if (pts.size() != 10 || line < 0 || line > 2 || i == j || i < 6 || j < 6 || i > 9 || j > 9) {
    fail(ErrorKind::PreconditionViolated, "skew swap: bad arguments");
  }
  const auto plane = plane_through(pts.subspan(6, 4));
  if (!plane || rank_of_points(pts.subspan(6, 4)) != 3) fail(ErrorKind::PreconditionViolated, "skew swap: 6..9 do not span a plane");
  const auto [k, l] = opposite(i, j);
  const int p = 2 * line, q = 2 * line + 1;
  const Extensor pq_pierce = meet(line_of(pts, p, q), *plane);
  if (pq_pierce.is_zero() || on_line(pq_pierce.to_point(), at(pts, i), at(pts, j))) {
    fail(ErrorKind::PreconditionViolated, "skew swap: pq meets the plane on line ij");
  }
  for (int other = 0; other < 3; ++other) {
    if (other == line) continue;
    const Extensor pierce = meet(line_of(pts, 2 * other, 2 * other + 1), *plane);
    if (pierce.is_zero() || on_line(pierce.to_point(), at(pts, k), at(pts, l))) {
      fail(ErrorKind::PreconditionViolated, "skew swap: a remaining line meets the plane on the opposite line kl");
    }
  }
  Labeling rel = identity_labeling();
  std::swap(rel[static_cast<std::size_t>(p)], rel[static_cast<std::size_t>(k)]);
  std::swap(rel[static_cast<std::size_t>(q)], rel[static_cast<std::size_t>(l)]);
  Pts after;
  for (int r : rel) after.push_back(at(pts, r));
  if (!generic_ready(after)) fail(ErrorKind::InternalInconsistency, "skew swap produced a non-generic labeling");
  return rel;
}

SplitResult split_skew(std::span<const Point> pts, const Extensor& plane) {
  const Extensor ab = line_of(pts, 0, 1);
  const Extensor gx = meet(line_of(pts, 2, 3), plane);
  const Extensor hx = meet(line_of(pts, 4, 5), plane);
  if (gx.is_zero() || hx.is_zero()) fail(ErrorKind::PreconditionViolated, "split: a line lies in the plane");
  const Point g = gx.to_point(), h = hx.to_point();
  Labeling ce_df = identity_labeling();
  std::swap(ce_df[3], ce_df[4]);
  Labeling cf_de = identity_labeling();
  cf_de[3] = 5;
  cf_de[4] = 3;
  cf_de[5] = 4;
  for (const auto& [alt, rel] : {std::pair{SplitAlternative::CE_DF, ce_df}, std::pair{SplitAlternative::CF_DE, cf_de}}) {
    const Extensor n1 = join(at(pts, rel[2]), at(pts, rel[3]));
    const Extensor n2 = join(at(pts, rel[4]), at(pts, rel[5]));
    if (!skew_lines(ab, n1) || !skew_lines(ab, n2) || !skew_lines(n1, n2)) continue;
    const Extensor g2 = meet(n1, plane);
    const Extensor h2 = meet(n2, plane);
    if (g2.is_zero() || h2.is_zero()) continue;
    const Point gp = g2.to_point(), hp = h2.to_point();
    if (gp == hp || on_line(gp, g, h) || on_line(hp, g, h)) continue;
    return {alt, rel, gp, hp};
  }
  fail(ErrorKind::InternalInconsistency, "split: neither recombination works");
}

namespace {

enum class PassStep { Done, Decided, Again };

struct PlaneOutcome {
  PassStep step = PassStep::Done;
  std::optional<Decision> decision;
};

std::array<int, 4> with_first(std::initializer_list<int> first) {
  std::array<int, 4> order{};
  std::size_t n = 0;
  for (int v : first) order[n++] = v;
  for (int w = 6; w <= 9; ++w) {
    if (std::find(first.begin(), first.end(), w) == first.end()) order[n++] = w;
  }
  return order;
}

// One pass over the configuration with 6..9 coplanar, following cases
// (A), (B1)-(B5), (C1)-(C4).
PlaneOutcome plane_pass(State& s) {
  const std::span<const Point> plane_pts(s.cur.data() + 6, 4);
  if (rank_of_points(plane_pts) <= 2) return {PassStep::Decided, yes(Branch::FourCollinear, kernel_certificate(s.orig), "case-A")};
  const Extensor pi = *plane_through(plane_pts);

  auto P = [&](int r) -> const Point& { return s.cur[static_cast<std::size_t>(r)]; };
  // A skew line inside the plane puts six points there. Off a conic, every
  // quadric through them contains the plane, and the other four decide.
  for (int t = 0; t < 3; ++t) {
    if (!meet(line_of(s.cur, 2 * t, 2 * t + 1), pi).is_zero()) continue;
    Pts six{P(2 * t), P(2 * t + 1), P(6), P(7), P(8), P(9)};
    if (sgn(conic_determinant(plane_coordinates(six))) == 0) {
      return {PassStep::Decided, yes(Branch::SixOnConic, kernel_certificate(s.orig), "line-in-plane:conic")};
    }
    const Vec4 h = plane_form(pi);
    Pts rest;
    for (const Point& x : s.cur) {
      Rational v = 0;
      for (std::size_t k = 0; k < 4; ++k) v += h[k] * x[k];
      if (sgn(v) != 0) rest.push_back(x);
    }
    const std::string tag = "line-in-plane:" + std::to_string(2 * t) + std::to_string(2 * t + 1);
    if (rank_of_points(rest) <= 3) {
      const auto other = plane_through(rest);
      return {PassStep::Decided, yes(Branch::PlaneComponent, PlanePair{h, other ? plane_form(*other) : h}, tag)};
    }
    return {PassStep::Decided, no(Branch::PlaneComponent, tag)};
  }
  auto A = [&](int t) {
    const Extensor m = meet(line_of(s.cur, 2 * t, 2 * t + 1), pi);
    if (m.is_zero()) throw DeadEnd{"a skew line lies in the plane of 6..9"};
    return m.to_point();
  };
  auto on = [&](const Point& x, int i, int j) { return on_line(x, P(i), P(j)); };
  auto swap_and_finish = [&](int line, int i, int j, const std::string& tag) {
    s.route.push_back(tag);
    s.route.push_back("skew-swap:" + std::to_string(line) + "/" + std::to_string(i) + std::to_string(j));
    s.relabel(skew_swap(s.cur, line, i, j));
    return PlaneOutcome{PassStep::Done, std::nullopt};
  };
  auto split_and_again = [&](const std::string& tag) {
    s.route.push_back(tag);
    const auto r = split_skew(s.cur, pi);
    s.route.push_back(r.alternative == SplitAlternative::CE_DF ? "split-skew:CE_DF" : "split-skew:CF_DE");
    s.relabel(r.relabel);
    return PlaneOutcome{PassStep::Again, std::nullopt};
  };
  // a = 6: some line 6k avoids b and c; it becomes the opposite of 78.
  auto a_is_six = [&](const std::string& tag) {
    const Point b = A(1), c = A(2);
    for (int k = 7; k <= 9; ++k) {
      if (on(b, 6, k) || on(c, 6, k)) continue;
      std::array<int, 4> order = with_first({6});
      std::rotate(std::find(order.begin(), order.end(), k), std::find(order.begin(), order.end(), k) + 1, order.end());
      s.relabel(plane_order(order));
      return swap_and_finish(0, 7, 8, tag);
    }
    throw DeadEnd{tag + ": every line through 6 meets b or c"};
  };

  const std::array<Point, 3> pierce{A(0), A(1), A(2)};

  std::vector<std::pair<int, int>> equal;  // (line, role)
  for (int t = 0; t < 3; ++t)
    for (int v = 6; v <= 9; ++v) {
      if (pierce[static_cast<std::size_t>(t)] == P(v)) equal.emplace_back(t, v);
    }
  if (equal.size() >= 2) {
    const auto [t1, v1] = equal[0];
    const auto [t2, v2] = equal[1];
    const std::array<int, 3> l1{2 * t1, 2 * t1 + 1, v1}, l2{2 * t2, 2 * t2 + 1, v2};
    std::array<int, 4> rest{};
    std::size_t n = 0;
    for (int r = 0; r < 10; ++r) {
      if (std::find(l1.begin(), l1.end(), r) == l1.end() && std::find(l2.begin(), l2.end(), r) == l2.end()) rest[n++] = r;
    }
    s.route.push_back("two-pierce-points-coincide");
    return {PassStep::Decided, qd_two_lines(s.cur, l1, l2, rest)};
  }

  int off = -1;
  for (int v = 6; v <= 9 && off < 0; ++v) {
    const auto tri = with_first({v});
    if (collinear(P(tri[1]), P(tri[2]), P(tri[3]))) off = v;
  }

  if (off >= 0) {
    s.route.push_back("case-B");
    s.relabel(plane_order(with_first({off})));
    for (int t = 0; t < 3; ++t) {
      if (A(t) == P(6)) {
        s.relabel(line_first(t));
        return a_is_six("B2");
      }
    }
    for (int t = 0; t < 3; ++t)
      for (int v = 7; v <= 9; ++v) {
        if (!(A(t) == P(v))) continue;
        s.relabel(line_first(t));
        s.relabel(plane_order(with_first({6, v})));
        bool b_on = on(A(1), 7, 8), c_on = on(A(2), 7, 8);
        if (!b_on && !c_on) return swap_and_finish(0, 6, 8, "B3a");
        if (!b_on) {
          s.relabel(swap_lines_12());
          std::swap(b_on, c_on);
        }
        if (!c_on) return swap_and_finish(2, 7, 8, "B3b");
        return split_and_again("B3c");
      }
    for (int t = 0; t < 3; ++t)
      for (int k = 7; k <= 9; ++k) {
        if (!on(A(t), 6, k)) continue;
        s.relabel(line_first(t));
        s.relabel(plane_order(with_first({6, k})));
        const Point b = A(1), c = A(2);
        static constexpr std::array<std::array<int, 4>, 3> kOptions{{{6, 8, 7, 9}, {6, 9, 7, 8}, {7, 9, 6, 8}}};
        for (const auto& [k1, l1, i1, j1] : kOptions) {
          if (!on(b, k1, l1) && !on(c, k1, l1)) return swap_and_finish(0, i1, j1, "B4");
        }
        throw DeadEnd{"B4: b and c block every opposite line"};
      }
    for (int t = 0; t < 3; ++t) {
      if (!on(A(t), 7, 8)) continue;
      s.relabel(line_first(t));
      const bool b_on = on(A(1), 7, 8), c_on = on(A(2), 7, 8);
      if (!b_on && !c_on) return swap_and_finish(0, 6, 7, "B5a");
      if (b_on && !c_on) return swap_and_finish(2, 8, 9, "B5b");
      if (!b_on && c_on) return swap_and_finish(1, 8, 9, "B5b");
      return split_and_again("B5c");
    }
    return swap_and_finish(0, 6, 7, "B1");
  }

  s.route.push_back("case-C");
  for (int t = 0; t < 3; ++t)
    for (int v = 6; v <= 9; ++v) {
      if (!(A(t) == P(v))) continue;
      s.relabel(line_first(t));
      s.relabel(plane_order(with_first({v})));
      return a_is_six("C2");
    }
  auto lines_through = [&](const Point& x) {
    std::vector<std::pair<int, int>> ls;
    for (int i = 6; i <= 9; ++i)
      for (int j = i + 1; j <= 9; ++j) {
        if (on(x, i, j)) ls.emplace_back(i, j);
      }
    return ls;
  };
  for (int t = 0; t < 3; ++t) {
    const auto ls = lines_through(A(t));
    if (ls.size() != 1) continue;
    s.relabel(line_first(t));
    s.relabel(plane_order(with_first({ls[0].first, ls[0].second})));
    const Point a = A(0), b = A(1), c = A(2);
    static constexpr std::array<std::array<int, 2>, 5> kLines{{{6, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}}};
    for (const auto& [k1, l1] : kLines) {
      const auto ij = opposite(k1, l1);
      if (!on(b, k1, l1) && !on(c, k1, l1) && !on(a, ij[0], ij[1])) return swap_and_finish(0, ij[0], ij[1], "C3");
    }
    throw DeadEnd{"C3: no usable line"};
  }
  for (int t = 0; t < 3; ++t) {
    const auto ls = lines_through(A(t));
    if (ls.size() != 2) continue;
    s.relabel(line_first(t));
    s.relabel(plane_order({ls[0].first, ls[0].second, ls[1].first, ls[1].second}));
    const Point b = A(1), c = A(2);
    static constexpr std::array<std::array<int, 2>, 4> kLines{{{6, 8}, {6, 9}, {7, 8}, {7, 9}}};
    for (const auto& [k1, l1] : kLines) {
      const auto ij = opposite(k1, l1);
      if (!on(b, k1, l1) && !on(c, k1, l1)) return swap_and_finish(0, ij[0], ij[1], "C4a");
    }
    return split_and_again("C4b");
  }
  return swap_and_finish(0, 6, 7, "C1");
}

Normalized safety_net(std::span<const Point> pts, std::vector<std::string> route) {
  route.push_back("safety-net");
  Pts p(pts.begin(), pts.end());
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b)
      for (int c = a + 1; c < 10; ++c) {
        if (c == b) continue;
        for (int d = c + 1; d < 10; ++d) {
          if (d == b || sgn(bracket(p[a], p[b], p[c], p[d])) == 0) continue;
          for (int e = c + 1; e < 10; ++e) {
            if (e == b || e == d) continue;
            for (int f = e + 1; f < 10; ++f) {
              if (f == b || f == d) continue;
              Labeling lab{a, b, c, d, e, f, 0, 0, 0, 0};
              std::size_t n = 6;
              for (int r = 0; r < 10; ++r) {
                if (std::find(lab.begin(), lab.begin() + 6, r) == lab.begin() + 6) lab[n++] = r;
              }
              if (generic_ready(apply_labeling(pts, lab))) {
                route.push_back("safety-net:labeling");
                return {std::nullopt, lab, std::move(route)};
              }
            }
          }
        }
      }
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b)
      for (int c = b + 1; c < 10; ++c) {
        if (collinear(p[a], p[b], p[c])) triples.push_back({a, b, c});
      }
  for (std::size_t i = 0; i < triples.size(); ++i)
    for (std::size_t j = i + 1; j < triples.size(); ++j) {
      const auto& t1 = triples[i];
      const auto& t2 = triples[j];
      bool disjoint = true;
      for (int u : t1) disjoint = disjoint && std::find(t2.begin(), t2.end(), u) == t2.end();
      if (!disjoint || !skew_lines(line_of(p, t1[0], t1[1]), line_of(p, t2[0], t2[1]))) continue;
      std::array<int, 4> rest{};
      std::size_t n = 0;
      for (int r = 0; r < 10; ++r) {
        if (std::find(t1.begin(), t1.end(), r) == t1.end() && std::find(t2.begin(), t2.end(), r) == t2.end()) rest[n++] = r;
      }
      route.push_back("safety-net:two-lines");
      Decision d = qd_two_lines(pts, t1, t2, rest);
      route.insert(route.end(), d.route.begin(), d.route.end());
      d.route = route;
      return {std::move(d), identity_labeling(), std::move(route)};
    }
  route.push_back("safety-net:oracle");
  Decision d;
  d.on_quadric = oracle_decide(pts);
  d.branch = Branch::Unresolved;
  d.flagged = true;
  if (d.on_quadric) d.certificate = kernel_certificate(pts);
  d.route = route;
  return {std::move(d), identity_labeling(), std::move(route)};
}

}  // namespace

Normalized normalize(std::span<const Point> pts) {
  if (pts.size() != 10) fail(ErrorKind::PreconditionViolated, "need ten points");
  for (auto* exit : {&qd_duplicates, &qd_four_collinear, &qd_six_on_plane_conic, &qd_three_lines}) {
    if (auto d = (*exit)(pts)) return {d, identity_labeling(), d->route};
  }
  SkewSearch skew = find_three_skew(pts);
  if (skew.decision) return {skew.decision, identity_labeling(), skew.decision->route};

  State s{pts, skew.labeling, apply_labeling(pts, skew.labeling), {"three-skew"}};
  std::vector<std::string> splits_seen;
  for (;;) {
    if (generic_ready(s.cur)) return {std::nullopt, s.lab, s.route};
    try {
      PlaneOutcome o = plane_pass(s);
      if (o.step == PassStep::Decided) {
        Decision d = with_context(std::move(*o.decision), s);
        return {d, s.lab, d.route};
      }
      if (o.step == PassStep::Done) {
        if (generic_ready(s.cur)) return {std::nullopt, s.lab, s.route};
        throw DeadEnd{"swap did not reach general position"};
      }
      const std::string tag = s.route[s.route.size() - 2];
      if (std::find(splits_seen.begin(), splits_seen.end(), tag) != splits_seen.end()) throw DeadEnd{tag + " revisited"};
      splits_seen.push_back(tag);
    } catch (const DeadEnd& e) {
      s.route.push_back("dead-end:" + e.why);
      break;
    } catch (const GeometryError& e) {
      s.route.push_back(std::string("dead-end:") + e.what());
      break;
    }
  }
  return safety_net(pts, s.route);
}

}  // namespace quadsyn
