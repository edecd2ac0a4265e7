#include "quadsyn/generic_case.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include "quadsyn/error.hpp"
#include "quadsyn/linalg.hpp"

namespace quadsyn {

namespace {

Rational br(std::span<const Point> p, int a, int b, int c, int d) {
  return bracket(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)], p[static_cast<std::size_t>(c)],
                 p[static_cast<std::size_t>(d)]);
}

Rational br_x(std::span<const Point> p, const std::array<int, 3>& t, const Point& x) {
  return bracket(p[static_cast<std::size_t>(t[0])], p[static_cast<std::size_t>(t[1])], p[static_cast<std::size_t>(t[2])], x);
}

Vec4 meet_line_plane(std::span<const Point> p, int l0, int l1, int a, int b, int c) {
  const auto& P = [&](int i) -> const Point& { return p[static_cast<std::size_t>(i)]; };
  return meet(join(P(l0), P(l1)), join(P(a), P(b), P(c))).to_vector();
}

std::string triple_name(const std::array<int, 3>& t, int x) {
  std::string s = "[";
  for (int v : t) s += std::to_string(v);
  return s + std::to_string(x) + "]";
}

}  // namespace

Rational compute_Q(std::span<const Point> p) {
  if (p.size() < 6) fail(ErrorKind::PreconditionViolated, "Q needs six points");
  return br(p, 0, 1, 2, 5) * br(p, 0, 2, 3, 4) * br(p, 1, 3, 4, 5) - br(p, 0, 1, 2, 4) * br(p, 2, 3, 4, 5) * br(p, 0, 1, 3, 5);
}

Rational ceva_incidence_check(std::span<const Point> p) {
  if (p.size() < 6) fail(ErrorKind::PreconditionViolated, "incidence check needs six points");
  if (sgn(br(p, 0, 1, 2, 3)) == 0) fail(ErrorKind::Degenerate, "[0123] = 0");
  const Vec4 pv = meet_line_plane(p, 2, 3, 0, 1, 5);
  const Vec4 qv = meet_line_plane(p, 1, 3, 0, 2, 4);
  const Vec4 rv = meet_line_plane(p, 1, 2, 3, 4, 5);
  const auto& v = [&](int i) -> const Vec4& { return p[static_cast<std::size_t>(i)].coords(); };
  return -bracket(v(1), v(0), v(2), qv) * bracket(v(0), pv, v(3), rv) + bracket(pv, v(0), v(2), qv) * bracket(v(0), v(1), v(3), rv);
}

std::array<int, 6> find_Q_labeling(std::span<const Point> p) {
  std::array<int, 6> s;
  std::iota(s.begin(), s.end(), 0);
  do {
    std::array<Point, 6> q{p[static_cast<std::size_t>(s[0])], p[static_cast<std::size_t>(s[1])],
                           p[static_cast<std::size_t>(s[2])], p[static_cast<std::size_t>(s[3])],
                           p[static_cast<std::size_t>(s[4])], p[static_cast<std::size_t>(s[5])]};
    if (sgn(compute_Q(q)) != 0) return s;
  } while (std::next_permutation(s.begin(), s.end()));
  fail(ErrorKind::NoPermutation, "every relabeling of the six points gives Q = 0");
}

const std::array<BasisQuadric, 4>& basis_S() {
  static const std::array<BasisQuadric, 4> s{{
      {{0, 1, 5}, {2, 3, 4}},
      {{0, 1, 2}, {3, 4, 5}},
      {{0, 2, 4}, {1, 3, 5}},
      {{0, 4, 5}, {1, 2, 3}},
  }};
  return s;
}

MatrixM build_M(std::span<const Point> pts) {
  if (pts.size() != 10) fail(ErrorKind::PreconditionViolated, "M needs ten points");
  MatrixM m;
  for (int r = 0; r < 4; ++r) {
    const Point& x = pts[static_cast<std::size_t>(6 + r)];
    for (int c = 0; c < 4; ++c) {
      const auto& b = basis_S()[static_cast<std::size_t>(c)];
      m.entries[r][c] = br_x(pts, b.first, x) * br_x(pts, b.second, x);
      m.provenance[r][c] = triple_name(b.first, 6 + r) + triple_name(b.second, 6 + r);
    }
  }
  return m;
}

bool generic_preconditions(std::span<const Point> pts, std::string* why) {
  auto reject = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (pts.size() != 10) return reject("need ten points");
  for (std::size_t i = 0; i < 10; ++i) {
    for (std::size_t j = i + 1; j < 10; ++j) {
      if (pts[i] == pts[j]) return reject("points are not distinct");
    }
  }
  for (int a = 0; a < 10; ++a)
    for (int b = a + 1; b < 10; ++b)
      for (int c = b + 1; c < 10; ++c)
        for (int d = c + 1; d < 10; ++d) {
          if (rank_of_points({pts[a], pts[b], pts[c], pts[d]}) <= 2) return reject("four points are collinear");
        }
  if (sgn(br(pts, 0, 1, 2, 3)) == 0) return reject("lines 01 and 23 meet");
  if (sgn(br(pts, 0, 1, 4, 5)) == 0) return reject("lines 01 and 45 meet");
  if (sgn(br(pts, 2, 3, 4, 5)) == 0) return reject("lines 23 and 45 meet");
  if (sgn(br(pts, 6, 7, 8, 9)) == 0) return reject("points 6..9 are coplanar");
  return true;
}

Tetrahedron test_tetrahedron(std::span<const Point> pts) {
  const Vec4 u = pts[6].coords() + pts[7].coords() + pts[8].coords() + pts[9].coords();
  return {{pts[6], pts[7], pts[8], pts[9]}, Point(u)};
}

Point construct_test_point(std::span<const Point> pts, const MatrixM& m, int r, Trace* trace) {
  int chart = -1;
  for (int i = 0; i < 4; ++i) {
    if (sgn(m.entries[i][r]) != 0) {
      chart = i;
      break;
    }
  }
  if (chart < 0) fail(ErrorKind::ZeroColumn, "column of M is zero");
  const Tetrahedron tet = test_tetrahedron(pts);
  const auto& b = basis_S()[static_cast<std::size_t>(r)];
  const auto& P = [&](int i) -> const Point& { return pts[static_cast<std::size_t>(i)]; };
  const Point& vi = tet.vertices[chart];
  std::array<Point, 3> projs{vi, vi, vi};
  std::size_t n = 0;
  for (int j = 0; j < 4; ++j) {
    if (j == chart) continue;
    const Point& vj = tet.vertices[j];
    const LineFrame f = edge_frame(tet, chart, j);
    const Point px = local_param_point(vi, vj, P(b.first[0]), P(b.first[1]), P(b.first[2]), trace);
    const Point qx = von_staudt_inverse(f, px, trace);
    const Point py = local_param_point(vi, vj, P(b.second[0]), P(b.second[1]), P(b.second[2]), trace);
    const Point qy = von_staudt_inverse(f, py, trace);
    projs[n++] = von_staudt_product(f, qx, qy, trace);
  }
  const Point out = recover_from_chart(tet, chart, projs, trace);
  if (trace) trace->set_label(static_cast<int>(trace->size()) - 1, "Q" + std::to_string(r + 1));
  return out;
}

Decision decide_generic(std::span<const Point> input, const GenericOptions& options) {
  std::string why;
  if (!generic_preconditions(input, &why)) fail(ErrorKind::PreconditionViolated, "generic case: " + why);

  const auto sigma = find_Q_labeling(input.first(6));
  Labeling lab = identity_labeling();
  for (std::size_t i = 0; i < 6; ++i) lab[i] = sigma[i];
  const std::vector<Point> pts = apply_labeling(input, lab);

  Decision d;
  d.labeling = lab;
  d.route.push_back("generic");
  const MatrixM m = build_M(pts);

  for (int c = 0; c < 4; ++c) {
    bool zero = true;
    for (int r = 0; r < 4; ++r) zero = zero && sgn(m.entries[r][c]) == 0;
    if (!zero) continue;
    const auto& b = basis_S()[static_cast<std::size_t>(c)];
    const auto& P = [&](int i) -> const Point& { return pts[static_cast<std::size_t>(i)]; };
    d.on_quadric = true;
    d.branch = Branch::TwoPlanes;
    d.certificate = PlanePair{plane_form(P(b.first[0]), P(b.first[1]), P(b.first[2])),
                              plane_form(P(b.second[0]), P(b.second[1]), P(b.second[2]))};
    d.route.push_back("zero-column");
    return d;
  }

  std::array<std::optional<Point>, 4> q;
  std::array<Trace, 4> traces;
  std::array<std::exception_ptr, 4> errors;
#pragma omp parallel for if (options.parallel) schedule(static)
  for (int r = 0; r < 4; ++r) {
    try {
      q[static_cast<std::size_t>(r)] = construct_test_point(pts, m, r, options.record_trace ? &traces[static_cast<std::size_t>(r)] : nullptr);
    } catch (...) {
      errors[static_cast<std::size_t>(r)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  d.branch = Branch::Generic;
  d.on_quadric = sgn(bracket(*q[0], *q[1], *q[2], *q[3])) == 0;
  if (options.record_trace) {
    Trace merged;
    for (int i = 0; i < 10; ++i) merged.point(pts[static_cast<std::size_t>(i)], std::to_string(i));
    for (const auto& t : traces) merged.append(t);
    d.trace = std::move(merged);
  }
  if (d.on_quadric) {
    linalg::RatMatrix mm(4, std::vector<Rational>(4));
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) mm[r][c] = m.entries[r][c];
    }
    const auto ker = linalg::kernel(std::move(mm), 4);
    if (ker.empty()) fail(ErrorKind::InternalInconsistency, "coplanar test points but M is invertible");
    QuadricCoeffs cert{};
    for (std::size_t c = 0; c < 4; ++c) {
      const auto& b = basis_S()[c];
      const auto& P = [&](int i) -> const Point& { return pts[static_cast<std::size_t>(i)]; };
      const QuadricCoeffs s = product_of_forms(plane_form(P(b.first[0]), P(b.first[1]), P(b.first[2])),
                                               plane_form(P(b.second[0]), P(b.second[1]), P(b.second[2])));
      for (std::size_t k = 0; k < 10; ++k) cert[k] += ker[0][c] * s[k];
    }
    d.certificate = cert;
  }
  return d;
}

}  // namespace quadsyn
