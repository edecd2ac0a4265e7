#include "quadsyn/constructions.hpp"

#include <algorithm>

#include "quadsyn/error.hpp"
#include "quadsyn/linalg.hpp"

namespace quadsyn {

namespace {

// Computes joins and meets, mirroring each into the trace when one is given.
class Drawer {
 public:
  struct Obj {
    Extensor e = Extensor::zero(0);
    int id = -1;
  };

  explicit Drawer(Trace* t) : t_(t) {}

  Obj pt(const Point& p) { return {Extensor::point(p), t_ ? t_->point(p) : -1}; }

  Obj join(const Obj& a, const Obj& b) {
    if (!t_) return {quadsyn::join(a.e, b.e)};
    const int id = t_->join(a.id, b.id);
    return {t_->output(id), id};
  }

  Obj meet(const Obj& a, const Obj& b) {
    if (!t_) return {quadsyn::meet(a.e, b.e)};
    const int id = t_->meet(a.id, b.id);
    return {t_->output(id), id};
  }

  Obj line(const Point& a, const Point& b) { return join(pt(a), pt(b)); }
  Obj plane(const Point& a, const Point& b, const Point& c) { return join(line(a, b), pt(c)); }

  Point point_of(const Obj& o, ErrorKind kind, const char* what) {
    if (o.e.is_zero()) fail(kind, what);
    return o.e.to_point();
  }

  // Two lines of a common plane, met through a witness off that plane.
  Point intersect(const Obj& l1, const Obj& l2, const Point& witness) {
    return point_of(meet(l1, join(l2, pt(witness))), ErrorKind::DegenerateMeet, "lines do not meet in a point");
  }

  int id(const Point& p) { return t_ ? t_->point(p) : -1; }

  void record(StepOp op, std::initializer_list<Point> inputs, const Point& out) {
    if (!t_) return;
    std::vector<int> ids;
    for (const auto& p : inputs) ids.push_back(t_->point(p));
    t_->add(op, std::move(ids), Extensor::point(out));
  }

 private:
  Trace* t_;
};

// Representatives z, i of zero and infinity with unit = z + i.
std::pair<Vec4, Vec4> scaled_reps(const LineFrame& f) {
  linalg::RatMatrix m(4, std::vector<Rational>(3));
  for (std::size_t r = 0; r < 4; ++r) {
    m[r][0] = f.zero[r];
    m[r][1] = f.infinity[r];
    m[r][2] = f.unit[r];
  }
  const auto ker = linalg::kernel(std::move(m), 3);
  if (ker.size() != 1 || sgn(ker[0][2]) == 0) fail(ErrorKind::NotCollinear, "frame points are not collinear");
  const Rational s = -1 / ker[0][2];
  return {(s * ker[0][0]) * f.zero.coords(), (s * ker[0][1]) * f.infinity.coords()};
}

std::array<int, 3> others(int i) {
  std::array<int, 3> o{};
  int n = 0;
  for (int k = 0; k < 4; ++k) {
    if (k != i) o[static_cast<std::size_t>(n++)] = k;
  }
  return o;
}

std::pair<int, int> complement_pair(int i, int j) {
  int k = -1, l = -1;
  for (int m = 0; m < 4; ++m) {
    if (m == i || m == j) continue;
    (k < 0 ? k : l) = m;
  }
  return {k, l};
}

bool is_degenerate(const Param& x) { return x.is_infinite() || x.is_zero(); }

}  // namespace

void validate(const LineFrame& f) {
  if (f.zero == f.infinity || f.zero == f.unit || f.infinity == f.unit) {
    fail(ErrorKind::CoincidentPoints, "frame points must be distinct");
  }
  if (!collinear(f.zero, f.infinity, f.unit)) fail(ErrorKind::NotCollinear, "frame points are not collinear");
}

Param line_parameter(const LineFrame& f, const Point& p) { return cross_ratio(f.infinity, f.zero, f.unit, p); }

Point point_at(const LineFrame& f, const Param& x) {
  if (x.is_infinite()) return f.infinity;
  const auto [z, i] = scaled_reps(f);
  return Point(z + x.value() * i);
}

void validate(const Tetrahedron& t) {
  if (rank_of_points(std::span<const Point>(t.vertices)) != 4) fail(ErrorKind::Degenerate, "tetrahedron vertices are coplanar");
  for (int i = 0; i < 4; ++i) {
    const auto o = others(i);
    if (sgn(bracket(t.vertices[o[0]], t.vertices[o[1]], t.vertices[o[2]], t.unit)) == 0) {
      fail(ErrorKind::Degenerate, "tetrahedron unit lies on a face");
    }
  }
}

Point edge_unit(const Tetrahedron& t, int i, int j) {
  const auto [k, l] = complement_pair(i, j);
  const auto& v = t.vertices;
  const Extensor m = meet(join(v[i], v[j]), join(v[k], v[l], t.unit));
  if (m.is_zero()) fail(ErrorKind::Degenerate, "tetrahedron unit lies on a face");
  return m.to_point();
}

LineFrame edge_frame(const Tetrahedron& t, int i, int j) { return {t.vertices[i], t.vertices[j], edge_unit(t, i, j)}; }

Point project_to_edge(const Tetrahedron& t, int i, int j, const Point& p, Trace* trace) {
  if (i == j || i < 0 || j < 0 || i > 3 || j > 3) fail(ErrorKind::PreconditionViolated, "edge needs two distinct vertex indices");
  const auto [k, l] = complement_pair(i, j);
  const auto& v = t.vertices;
  if (rank_of_points({v[k], v[l], p}) < 3) fail(ErrorKind::OnOppositeEdge, "point lies on the opposite edge");
  Drawer d(trace);
  const Point out = d.point_of(d.meet(d.line(v[i], v[j]), d.plane(v[k], v[l], p)), ErrorKind::OnOppositeEdge,
                               "projection undefined");
  d.record(StepOp::Projection, {v[i], v[j], v[k], v[l], p}, out);
  return out;
}

Point recover_from_chart(const Tetrahedron& t, int i, const std::array<Point, 3>& projs, Trace* trace) {
  const auto& v = t.vertices;
  const auto o = others(i);
  Drawer d(trace);
  std::array<Drawer::Obj, 3> planes;
  for (std::size_t n = 0; n < 3; ++n) {
    const int j = o[n];
    if (!collinear(v[i], v[j], projs[n])) fail(ErrorKind::InconsistentProjections, "projection is off its edge");
    if (projs[n] == v[j]) fail(ErrorKind::NotInChart, "projection equals the vertex at infinity");
    const auto [k, l] = complement_pair(i, j);
    planes[n] = d.plane(projs[n], v[k], v[l]);
  }
  const Point out = d.point_of(d.meet(d.meet(planes[0], planes[1]), planes[2]), ErrorKind::InconsistentProjections,
                               "planes do not meet in a single point");
  d.record(StepOp::Recover, {v[i], v[o[0]], v[o[1]], v[o[2]], projs[0], projs[1], projs[2]}, out);
  return out;
}

Point local_param_point(const Point& dp, const Point& e, const Point& a, const Point& b, const Point& c, Trace* trace) {
  if (dp == e) fail(ErrorKind::DegenerateMeet, "line needs two distinct points");
  if (!(rank_of_points({a, b, c}) == 3)) fail(ErrorKind::DegenerateMeet, "plane needs three independent points");
  Drawer d(trace);
  const Point out = d.point_of(d.meet(d.line(dp, e), d.plane(a, b, c)), ErrorKind::DegenerateMeet, "line lies in the plane");
  d.record(StepOp::LocalParam, {dp, e, a, b, c}, out);
  return out;
}

Auxiliaries choose_auxiliaries(const LineFrame& f, const std::vector<Point>& avoid) {
  validate(f);
  const auto [z, i] = scaled_reps(f);
  Vec4 t{};
  for (int k = 0; k < 4; ++k) {
    if (rank_of_points({f.zero, f.infinity, Point::basis(k)}) == 3) {
      t = Point::basis(k).coords();
      break;
    }
  }
  for (int r = 1; r <= 64; ++r) {
    std::vector<int> vals;
    for (int v = 1; v <= r; ++v) {
      vals.push_back(v);
      vals.push_back(-v);
    }
    for (int n : vals) {
      for (int m : vals) {
        if (std::max(std::abs(n), std::abs(m)) != r || n == m) continue;
        const Point a(z + i + Rational(n) * t);
        const Point lp(i + Rational(m) * t);
        const Extensor lprime = join(f.zero, lp);
        const bool bad = std::any_of(avoid.begin(), avoid.end(), [&](const Point& q) {
          return q == a || (q != f.zero && join(lprime, Extensor::point(q)).is_zero());
        });
        if (bad) continue;
        for (int k = 0; k < 4; ++k) {
          if (sgn(bracket(f.zero, f.infinity, a, Point::basis(k))) != 0) return {a, lp, lprime, Point::basis(k)};
        }
      }
    }
  }
  fail(ErrorKind::InternalInconsistency, "no auxiliary candidate survived the avoid set");
}

Point von_staudt_product(const LineFrame& f, const Point& px, const Point& py, Trace* trace) {
  return von_staudt_product(f, px, py, choose_auxiliaries(f), trace);
}

Point von_staudt_product(const LineFrame& f, const Point& px, const Point& py, const Auxiliaries& aux, Trace* trace) {
  validate(f);
  const Param x = line_parameter(f, px);
  const Param y = line_parameter(f, py);
  Drawer d(trace);
  if (is_degenerate(x) || is_degenerate(y)) {
    const Point out = point_at(f, x * y);
    d.record(StepOp::DegenerateProduct, {f.zero, f.infinity, f.unit, px, py}, out);
    return out;
  }
  const Point& w = aux.witness;
  const auto big_l = d.line(f.zero, f.infinity);
  const auto lprime = d.line(f.zero, aux.lprime_point);
  const Point p1p = d.intersect(d.line(aux.a, f.unit), lprime, w);
  const Point pyp = d.intersect(d.line(aux.a, py), lprime, w);
  const Point b = d.intersect(d.line(p1p, px), d.line(aux.a, f.infinity), w);
  const Point out = d.intersect(d.line(b, pyp), big_l, w);
  d.record(StepOp::Product, {f.zero, f.infinity, f.unit, px, py, aux.a, aux.lprime_point, w}, out);
  return out;
}

Point von_staudt_inverse(const LineFrame& f, const Point& px, Trace* trace) {
  return von_staudt_inverse(f, px, choose_auxiliaries(f), trace);
}

Point von_staudt_inverse(const LineFrame& f, const Point& px, const Auxiliaries& aux, Trace* trace) {
  validate(f);
  (void)line_parameter(f, px);
  Drawer d(trace);
  const Point& w = aux.witness;
  const Point& b = aux.a;
  const auto big_l = d.line(f.zero, f.infinity);
  const auto lprime = d.line(f.zero, aux.lprime_point);
  const Point s1 = d.intersect(d.line(px, b), lprime, w);
  const Point a2 = d.intersect(d.line(s1, f.unit), d.line(f.infinity, b), w);
  const Point s2 = d.intersect(d.line(f.unit, b), lprime, w);
  const Point out = d.intersect(d.line(s2, a2), big_l, w);
  d.record(StepOp::Inverse, {f.zero, f.infinity, f.unit, px, b, aux.lprime_point, w}, out);
  return out;
}

namespace {

Extensor recompute(const Trace& t, const Step& s) {
  auto p = [&](std::size_t k) { return t.point_of(s.inputs.at(k)); };
  auto expect_inputs = [&](std::size_t n) {
    if (s.inputs.size() != n) fail(ErrorKind::Parse, "wrong number of step inputs");
  };
  switch (s.op) {
    case StepOp::Point:
      expect_inputs(0);
      return s.output;
    case StepOp::Join:
      expect_inputs(2);
      return join(t.output(s.inputs[0]), t.output(s.inputs[1]));
    case StepOp::Meet: {
      expect_inputs(2);
      Extensor m = meet(t.output(s.inputs[0]), t.output(s.inputs[1]));
      if (m.grade() == 1 && !m.is_zero()) return Extensor::point(m.to_point());
      return m;
    }
    case StepOp::Product: {
      expect_inputs(8);
      const LineFrame f{p(0), p(1), p(2)};
      const Auxiliaries aux{p(5), p(6), join(p(0), p(6)), p(7)};
      return Extensor::point(von_staudt_product(f, p(3), p(4), aux));
    }
    case StepOp::DegenerateProduct: {
      expect_inputs(5);
      const LineFrame f{p(0), p(1), p(2)};
      validate(f);
      return Extensor::point(point_at(f, line_parameter(f, p(3)) * line_parameter(f, p(4))));
    }
    case StepOp::Inverse: {
      expect_inputs(7);
      const LineFrame f{p(0), p(1), p(2)};
      const Auxiliaries aux{p(4), p(5), join(p(0), p(5)), p(6)};
      return Extensor::point(von_staudt_inverse(f, p(3), aux));
    }
    case StepOp::Projection: {
      expect_inputs(5);
      const Tetrahedron tet{{p(0), p(1), p(2), p(3)}, p(0)};
      return Extensor::point(project_to_edge(tet, 0, 1, p(4)));
    }
    case StepOp::Recover: {
      expect_inputs(7);
      const Tetrahedron tet{{p(0), p(1), p(2), p(3)}, p(0)};
      return Extensor::point(recover_from_chart(tet, 0, {p(4), p(5), p(6)}));
    }
    case StepOp::LocalParam:
      expect_inputs(5);
      return Extensor::point(local_param_point(p(0), p(1), p(2), p(3), p(4)));
  }
  fail(ErrorKind::Parse, "unknown step op");
}

}  // namespace

ReplayReport replay(const Trace& trace) {
  ReplayReport report;
  for (const Step& s : trace.steps()) {
    ++report.checked;
    std::string why;
    try {
      for (int in : s.inputs) {
        if (in < 0 || in >= s.id) fail(ErrorKind::Parse, "input does not precede its use");
      }
      if (recompute(trace, s) == s.output) continue;
      why = "output differs from recomputation";
    } catch (const std::exception& e) {
      why = e.what();
    }
    report.ok = false;
    report.first_mismatch = s.id;
    report.message = "step " + std::to_string(s.id) + " (" + std::string(to_string(s.op)) + "): " + why;
    return report;
  }
  return report;
}

}  // namespace quadsyn
