#include "quadsyn/fixtures.hpp"

#include <algorithm>

#include "quadsyn/error.hpp"
#include "quadsyn/generic_case.hpp"
#include "quadsyn/oracle.hpp"
#include "quadsyn/reductions.hpp"

namespace quadsyn {

namespace {

constexpr SamplerBounds kSmall{40, 12};

Vec4 rand_vec(Rng& rng, std::int64_t bound = 20) {
  for (;;) {
    Vec4 v{Rational(static_cast<long>(rng.uniform(-bound, bound))), Rational(static_cast<long>(rng.uniform(-bound, bound))),
           Rational(static_cast<long>(rng.uniform(-bound, bound))), Rational(static_cast<long>(rng.uniform(-bound, bound)))};
    if (!is_zero(v)) return v;
  }
}

Rational rand_nonzero(Rng& rng, std::int64_t bound = 9) {
  for (;;) {
    Rational r = rng.rational(bound, 4);
    if (sgn(r) != 0) return r;
  }
}

// Random combinations; redrawn in the rare case they cancel.
Point on_segment(Rng& rng, const Point& a, const Point& b) {
  for (;;) {
    const Vec4 v = rand_nonzero(rng) * a.coords() + rand_nonzero(rng) * b.coords();
    if (!is_zero(v)) return Point(v);
  }
}

Point in_plane(Rng& rng, const Point& a, const Point& b, const Point& c) {
  for (;;) {
    const Vec4 v = rand_nonzero(rng) * a.coords() + rand_nonzero(rng) * b.coords() + rand_nonzero(rng) * c.coords();
    if (!is_zero(v)) return Point(v);
  }
}

Point random_point(Rng& rng) { return Point(rand_vec(rng)); }

// Second intersection of the line from p (on q = 0) towards w with q = 0.
std::optional<Point> second_intersection(const QuadricCoeffs& q, const Point& p, const Vec4& w) {
  const Rational qw = evaluate(q, Point(w));
  if (sgn(qw) == 0) return std::nullopt;
  // Scale-consistent evaluation on raw vectors.
  auto eval = [&](const Vec4& v) {
    const auto row = veronese_row(v);
    Rational s = 0;
    for (std::size_t i = 0; i < 10; ++i) s += q[i] * row[i];
    return s;
  };
  const Rational b = eval(p.coords() + w) - eval(p.coords()) - eval(w);
  const Rational lambda = -b / eval(w);
  const Vec4 v = p.coords() + lambda * w;
  if (is_zero(v) || sgn(lambda) == 0) return std::nullopt;
  return Point(v);
}

using V3 = std::array<Rational, 3>;

V3 cross(const V3& a, const V3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
Rational dot3(const V3& a, const V3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
bool on2(const V3& x, const V3& p, const V3& q) { return sgn(dot3(x, cross(p, q))) == 0; }
bool same2(const V3& a, const V3& b) {
  const V3 c = cross(a, b);
  return sgn(c[0]) == 0 && sgn(c[1]) == 0 && sgn(c[2]) == 0;
}
V3 comb2(Rng& rng, const V3& a, const V3& b) {
  const Rational s = rand_nonzero(rng), t = rand_nonzero(rng);
  return {s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2]};
}
V3 rand2(Rng& rng) {
  return {Rational(static_cast<long>(rng.uniform(-15, 15))), Rational(static_cast<long>(rng.uniform(-15, 15))), Rational(static_cast<long>(rng.uniform(1, 6)))};
}

// Plane point off every line through two of the given vertices.
V3 free2(Rng& rng, const std::vector<V3>& verts) {
  for (;;) {
    const V3 x = rand2(rng);
    bool ok = true;
    for (std::size_t i = 0; i < verts.size() && ok; ++i) {
      if (same2(x, verts[i])) ok = false;
      for (std::size_t j = i + 1; j < verts.size() && ok; ++j) {
        if (on2(x, verts[i], verts[j])) ok = false;
      }
    }
    if (ok) return x;
  }
}

// Lines through the three pierce points, plane points at roles 6..9.
Config assemble_plane_case(Rng& rng, const std::array<V3, 4>& plane_pts, const std::array<V3, 3>& pierce) {
  const Point e0 = random_point(rng), e1 = random_point(rng), e2 = random_point(rng);
  auto embed = [&](const V3& v) { return Point(v[0] * e0.coords() + v[1] * e1.coords() + v[2] * e2.coords()); };
  Config c(10, Point::basis(0));
  for (std::size_t t = 0; t < 3; ++t) {
    const Point a = embed(pierce[t]);
    const Point u = random_point(rng);
    c[2 * t] = u;
    c[2 * t + 1] = Point(a.coords() + rand_nonzero(rng) * u.coords());
  }
  for (std::size_t n = 0; n < 4; ++n) c[6 + n] = embed(plane_pts[n]);
  return c;
}

Point segre(const Rational& s, const Rational& t) { return Point(Rational(1), s, t, s * t); }

// On-quadric instances for the two open sub-cases B1 and C1.
Config plane_case_on_quadric(bool case_b, Rng& rng) {
  Config c(10, Point::basis(0));
  for (std::size_t k = 0; k < 6; ++k) c[k] = segre(rng.rational(9, 4), rng.rational(9, 4));
  if (case_b) {
    // Tangent plane section: the ruling s = s0 carries 7, 8, 9 and t = t0 carries 6.
    const Rational s0 = rng.rational(9, 4), t0 = rng.rational(9, 4);
    Rational s6;
    do s6 = rng.rational(9, 4);
    while (s6 == s0);
    c[6] = segre(s6, t0);
    for (std::size_t k = 7; k < 10; ++k) c[k] = segre(s0, rng.rational(9, 4));
  } else {
    for (std::size_t k = 6; k < 9; ++k) c[k] = segre(rng.rational(9, 4), rng.rational(9, 4));
    const std::vector<Point> nine(c.begin(), c.begin() + 9);
    const auto ker = quadric_through(nine);
    if (ker.size() == 1) {
      const Vec4 w = rand_nonzero(rng) * c[7].coords() + rand_nonzero(rng) * c[8].coords();
      if (auto x = second_intersection(ker[0], c[6], w)) c[9] = *x;
    }
  }
  const auto t = random_transform(rng);
  for (auto& p : c) p = t.apply(p);
  return c;
}

Config plane_case(std::string_view tag, Rng& rng, bool want_yes) {
  if (want_yes && (tag == "B1" || tag == "C1")) return plane_case_on_quadric(tag[0] == 'B', rng);
  const bool case_b = tag[0] == 'B';
  std::array<V3, 4> v;  // roles 6..9
  if (case_b) {
    v[1] = rand2(rng);
    do v[2] = rand2(rng);
    while (same2(v[1], v[2]));
    v[3] = comb2(rng, v[1], v[2]);
    do v[0] = rand2(rng);
    while (on2(v[0], v[1], v[2]));
  } else {
    for (;;) {
      for (auto& p : v) p = rand2(rng);
      bool ok = true;
      for (int i = 0; i < 4 && ok; ++i)
        for (int j = i + 1; j < 4 && ok; ++j)
          for (int k = j + 1; k < 4 && ok; ++k) {
            if (on2(v[i], v[j], v[k]) || same2(v[i], v[j])) ok = false;
          }
      if (ok) break;
    }
  }
  const std::vector<V3> verts(v.begin(), v.end());
  auto gen = [&] { return free2(rng, verts); };
  auto on_line_l = [&] { return comb2(rng, v[1], v[2]); };
  auto meet2 = [&](int i, int j, int k, int l) {
    return cross(cross(v[static_cast<std::size_t>(i - 6)], v[static_cast<std::size_t>(j - 6)]),
                 cross(v[static_cast<std::size_t>(k - 6)], v[static_cast<std::size_t>(l - 6)]));
  };
  std::array<V3, 3> p;
  if (tag == "B1" || tag == "C1") p = {gen(), gen(), gen()};
  else if (tag == "B2" || tag == "C2") p = {v[0], gen(), gen()};
  else if (tag == "B3a") p = {v[1], gen(), gen()};
  else if (tag == "B3b") p = {v[1], on_line_l(), gen()};
  else if (tag == "B3c") p = {v[1], on_line_l(), on_line_l()};
  else if (tag == "B4" || tag == "C3") p = {comb2(rng, v[0], v[1]), gen(), gen()};
  else if (tag == "B5a") p = {on_line_l(), gen(), gen()};
  else if (tag == "B5b") p = {on_line_l(), on_line_l(), gen()};
  else if (tag == "B5c") p = {on_line_l(), on_line_l(), on_line_l()};
  else if (tag == "C4a") p = {meet2(6, 7, 8, 9), gen(), gen()};
  else if (tag == "C4b") p = {meet2(6, 7, 8, 9), meet2(6, 8, 7, 9), meet2(6, 9, 7, 8)};
  else fail(ErrorKind::Parse, "unknown case tag");
  return assemble_plane_case(rng, v, p);
}

// Lines 01 + 6 and 23 + 7 carry three points each; 4, 5, 8 off both,
// 9 in the plane 678.
Config two_lines_case(Branch target, bool want_yes, Rng& rng) {
  Config c(10, Point::basis(0));
  for (int i = 0; i < 4; ++i) c[static_cast<std::size_t>(i)] = random_point(rng);
  c[6] = on_segment(rng, c[0], c[1]);
  c[7] = on_segment(rng, c[2], c[3]);
  const Extensor l1 = join(c[0], c[1]);
  const Extensor l2 = join(c[2], c[3]);
  auto foot = [&](const Point& p, const Extensor& from, const Extensor& to) {
    return meet(join(Extensor::point(p), from), to).to_point();
  };
  c[4] = random_point(rng);
  c[5] = random_point(rng);
  c[8] = random_point(rng);
  if (target == Branch::SharedTransversal) {
    const Point f2 = foot(c[4], l1, l2);
    c[8] = on_segment(rng, c[4], f2);
  } else if (target == Branch::PlaneLineCase) {
    const Point r = foot(c[4], l2, l1);
    const Point f2 = on_segment(rng, c[2], c[3]);
    c[8] = on_segment(rng, r, f2);
  }
  c[9] = in_plane(rng, c[6], c[7], c[8]);
  if (want_yes && target == Branch::PlaneLineCase) {
    const Extensor line = meet(join(c[0], c[1], c[5]), join(c[6], c[7], c[8]));
    const auto basis = support_basis(line);
    c[9] = on_segment(rng, basis[0], basis[1]);
  } else if (want_yes && target == Branch::TwoLinesGrassmann) {
    const std::vector<Point> nine{c[0], c[1], c[6], c[2], c[3], c[7], c[4], c[5], c[8]};
    const auto ker = quadric_through(nine);
    if (ker.size() == 1) {
      const Vec4 w = rand_nonzero(rng) * c[7].coords() + rand_nonzero(rng) * c[8].coords();
      if (auto x = second_intersection(ker[0], c[6], w)) c[9] = *x;
    }
  }
  return c;
}

Config three_lines_case(bool want_yes, Rng& rng) {
  std::vector<Point> pts;
  std::array<Rational, 3> s{};
  for (auto& v : s) v = rng.rational(9, 3);
  for (const auto& si : s) {
    for (int k = 0; k < 3; ++k) pts.emplace_back(Rational(1), si, rng.rational(9, 3), Rational(0));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 3; ++k) {
      const Vec4 v = pts[3 * i + k].coords();
      pts[3 * i + k] = Point(Rational(1), s[i], v[2], s[i] * v[2]);
    }
  }
  if (want_yes) {
    const Rational a = rng.rational(9, 3), b = rng.rational(9, 3);
    pts.emplace_back(Rational(1), a, b, a * b);
  } else {
    pts.push_back(random_point(rng));
  }
  const auto t = random_transform(rng);
  for (auto& p : pts) p = t.apply(p);
  return pts;
}

Config branch_candidate(Branch b, Rng& rng, std::uint64_t seed) {
  const bool want_yes = seed % 2 == 0;
  switch (b) {
    case Branch::Duplicate: {
      Config c = sample_generic(rng.next(), 10, kSmall);
      const auto i = static_cast<std::size_t>(rng.uniform(0, 9));
      auto j = static_cast<std::size_t>(rng.uniform(0, 8));
      if (j >= i) ++j;
      c[j] = c[i];
      return c;
    }
    case Branch::FourCollinear: {
      Config c = sample_generic(rng.next(), 10, kSmall);
      for (std::size_t k = 2; k < 4; ++k) c[k] = on_segment(rng, c[0], c[1]);
      return c;
    }
    case Branch::SixOnConic: {
      Config c = sample_generic(rng.next(), 10, kSmall);
      const Point a = random_point(rng), bb = random_point(rng), cc = random_point(rng);
      for (std::size_t k = 0; k < 6; ++k) {
        const Rational t = rng.rational(9, 4);
        c[k] = Point(a.coords() + t * bb.coords() + (t * t) * cc.coords());
      }
      return c;
    }
    case Branch::Coplanar: {
      const Point a = random_point(rng), bb = random_point(rng), cc = random_point(rng);
      Config c;
      for (int k = 0; k < 10; ++k) c.push_back(in_plane(rng, a, bb, cc));
      return c;
    }
    case Branch::CoplanarWithTwoLines: {
      Config c(10, Point::basis(0));
      for (std::size_t k = 0; k < 5; ++k) c[k] = random_point(rng);
      for (std::size_t k = 5; k < 8; ++k) c[k] = in_plane(rng, c[0], c[1], c[4]);
      for (std::size_t k = 8; k < 10; ++k) c[k] = in_plane(rng, c[2], c[3], c[4]);
      return c;
    }
    case Branch::ThreeLinesGrassmann:
      return three_lines_case(want_yes, rng);
    case Branch::SharedTransversal:
    case Branch::PlaneLineCase:
    case Branch::TwoLinesGrassmann:
      return two_lines_case(b, want_yes, rng);
    case Branch::TwoPlanes: {
      Config c(10, Point::basis(0));
      for (std::size_t k = 0; k < 6; ++k) c[k] = random_point(rng);
      c[6] = in_plane(rng, c[0], c[1], c[5]);
      c[7] = in_plane(rng, c[0], c[1], c[5]);
      c[8] = in_plane(rng, c[2], c[3], c[4]);
      c[9] = in_plane(rng, c[2], c[3], c[4]);
      return c;
    }
    case Branch::PlaneComponent: {
      // Line 01 inside the plane of 6..9.
      Config c(10, Point::basis(0));
      const Point a = random_point(rng), bb = random_point(rng), cc = random_point(rng);
      for (std::size_t k : {0, 1, 6, 7, 8, 9}) c[k] = in_plane(rng, a, bb, cc);
      for (std::size_t k = 2; k < 6; ++k) c[k] = random_point(rng);
      return c;
    }
    case Branch::Generic:
      return want_yes ? sample_on_quadric(rng.next(), 10, true, kSmall) : sample_generic(rng.next(), 10, kSmall);
    case Branch::Unresolved:
      break;
  }
  fail(ErrorKind::Parse, "no fixture for this branch");
}

bool route_has(const Decision& d, std::string_view tag) {
  return std::find(d.route.begin(), d.route.end(), tag) != d.route.end();
}

}  // namespace

const std::vector<std::string>& case_tags() {
  static const std::vector<std::string> tags{"B1", "B2", "B3a", "B3b", "B3c", "B4", "B5a", "B5b", "B5c",
                                             "C1", "C2", "C3", "C4a", "C4b"};
  return tags;
}

const std::vector<std::string>& fixture_kinds() {
  static const std::vector<std::string> kinds = [] {
    std::vector<std::string> k{"on-quadric", "generic"};
    for (Branch b : all_branches()) {
      if (b != Branch::Unresolved) k.push_back("qd-branch:" + std::string(to_string(b)));
    }
    for (const auto& t : case_tags()) k.push_back("case:" + t);
    return k;
  }();
  return kinds;
}

bool is_fixture_kind(std::string_view kind) {
  const auto& k = fixture_kinds();
  return std::find(k.begin(), k.end(), kind) != k.end();
}

Config make_fixture(std::string_view kind, std::uint64_t seed) {
  if (!is_fixture_kind(kind)) fail(ErrorKind::Parse, "unknown fixture kind: " + std::string(kind));
  if (kind == "on-quadric") return sample_on_quadric(seed, 10);
  if (kind == "generic") return sample_generic(seed, 10);
  // Constructed fixtures can land in a more special position by chance;
  // draw again until the intended exit fires.
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    Rng rng(mix_seed(seed, attempt));
    Config c;
    std::string tag;
    try {
      if (kind.starts_with("case:")) {
        tag = std::string(kind.substr(5));
        c = plane_case(tag, rng, seed % 2 == 0);
      } else {
        const auto b = branch_from_string(kind.substr(10));
        c = branch_candidate(*b, rng, seed);
      }
    } catch (const GeometryError&) {
      continue;
    }
    const bool distinct_ok = kind == "qd-branch:duplicate" || !qd_duplicates(c).has_value();
    if (!distinct_ok) continue;
    Decision d;
    try {
      d = decide(c);
    } catch (const GeometryError&) {
      continue;
    }
    if (!tag.empty()) {
      if (route_has(d, tag) && !d.flagged) return c;
    } else if (std::string(to_string(d.branch)) == kind.substr(10) && !d.flagged) {
      return c;
    }
  }
  fail(ErrorKind::InternalInconsistency, "could not synthesize fixture " + std::string(kind));
}

Config mutate(const Config& base, Mutation m, std::uint64_t seed) {
  Rng rng(seed);
  Config c = base;
  auto pick = [&](std::size_t avoid1, std::size_t avoid2) {
    for (;;) {
      const auto k = static_cast<std::size_t>(rng.uniform(0, 9));
      if (k != avoid1 && k != avoid2) return k;
    }
  };
  switch (m) {
    case Mutation::Duplicate: {
      const auto i = static_cast<std::size_t>(rng.uniform(0, 9));
      c[pick(i, i)] = c[i];
      break;
    }
    case Mutation::CollinearCollapse: {
      const auto i = static_cast<std::size_t>(rng.uniform(0, 9));
      const auto j = pick(i, i);
      const int moved = static_cast<int>(rng.uniform(1, 2));
      for (int n = 0; n < moved; ++n) c[pick(i, j)] = on_segment(rng, c[i], c[j]);
      break;
    }
    case Mutation::CoplanarCollapse: {
      const auto i = static_cast<std::size_t>(rng.uniform(0, 9));
      const auto j = pick(i, i);
      std::size_t k;
      do k = pick(i, j);
      while (k == i || k == j);
      const int moved = static_cast<int>(rng.uniform(1, 4));
      for (int n = 0; n < moved; ++n) {
        std::size_t t;
        do t = static_cast<std::size_t>(rng.uniform(0, 9));
        while (t == i || t == j || t == k);
        c[t] = in_plane(rng, c[i], c[j], c[k]);
      }
      break;
    }
  }
  return c;
}

Config fuzz_config(std::uint64_t seed, std::uint64_t index) {
  const std::uint64_t s = mix_seed(seed, index);
  Rng rng(s);
  switch (rng.uniform(0, 5)) {
    case 0:
      return sample_on_quadric(rng.next(), 10, true, kSmall);
    case 1:
      return sample_generic(rng.next(), 10, kSmall);
    case 2: {
      const auto& kinds = fixture_kinds();
      const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(kinds.size()) - 1));
      return make_fixture(kinds[k], rng.next());
    }
    default: {
      const Config base = rng.coin() ? sample_on_quadric(rng.next(), 10, true, kSmall) : sample_generic(rng.next(), 10, kSmall);
      const auto m = static_cast<Mutation>(rng.uniform(0, 2));
      return mutate(base, m, rng.next());
    }
  }
}

}  // namespace quadsyn
