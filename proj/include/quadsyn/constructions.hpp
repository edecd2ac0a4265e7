#pragma once

#include <array>
#include <vector>

#include "quadsyn/extensor.hpp"
#include "quadsyn/trace.hpp"

namespace quadsyn {

/// Zero, infinity and unit on a line; collinear and pairwise distinct.
struct LineFrame {
  Point zero;
  Point infinity;
  Point unit;
};

/// Throws NotCollinear / CoincidentPoints.
void validate(const LineFrame& f);

/// Local parameter of p: (infinity, zero; unit, p).
Param line_parameter(const LineFrame& f, const Point& p);

/// The point with parameter x. Infinity gives the frame's infinity.
Point point_at(const LineFrame& f, const Param& x);

/// Four vertices in general position and a unit off every face.
struct Tetrahedron {
  std::array<Point, 4> vertices;
  Point unit;
};

void validate(const Tetrahedron& t);

/// Unit on edge ViVj: the edge met with the plane through the other two
/// vertices and the tetrahedron unit.
Point edge_unit(const Tetrahedron& t, int i, int j);
/// Frame with zero = Vi, infinity = Vj.
LineFrame edge_frame(const Tetrahedron& t, int i, int j);

/// Edge ViVj met with the plane VkVlp. Throws OnOppositeEdge.
Point project_to_edge(const Tetrahedron& t, int i, int j, const Point& p, Trace* trace = nullptr);

/// Rebuilds P in chart U_i from its projections on the edges ViVj,
/// j ascending over the other three indices.
Point recover_from_chart(const Tetrahedron& t, int i, const std::array<Point, 3>& projs, Trace* trace = nullptr);

/// meet(de, abc) = [abce]d - [abcd]e. Throws DegenerateMeet.
Point local_param_point(const Point& d, const Point& e, const Point& a, const Point& b, const Point& c,
                        Trace* trace = nullptr);

/// Auxiliary data for the two-projection constructions: a point a off the
/// frame line L, a line L' through zero (spanned by zero and
/// lprime_point), and a witness w off the plane of L and a.
struct Auxiliaries {
  Point a;
  Point lprime_point;
  Extensor lprime;
  Point witness;
};

/// First candidate from a fixed sequence that avoids the given points
/// (a not in avoid, no avoid point on L').
Auxiliaries choose_auxiliaries(const LineFrame& f, const std::vector<Point>& avoid = {});

/// Point with parameter x*y. Throws InfinityProduct for {0, inf}.
Point von_staudt_product(const LineFrame& f, const Point& px, const Point& py, Trace* trace = nullptr);
Point von_staudt_product(const LineFrame& f, const Point& px, const Point& py, const Auxiliaries& aux,
                         Trace* trace = nullptr);

/// Point with parameter 1/x; total on the line.
Point von_staudt_inverse(const LineFrame& f, const Point& px, Trace* trace = nullptr);
Point von_staudt_inverse(const LineFrame& f, const Point& px, const Auxiliaries& aux, Trace* trace = nullptr);

}  // namespace quadsyn
