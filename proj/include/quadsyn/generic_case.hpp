#pragma once

#include <array>
#include <span>
#include <string>

#include "quadsyn/constructions.hpp"
#include "quadsyn/decision.hpp"

namespace quadsyn {

/// [0125][0234][1345] - [0124][2345][0135] on the first six points.
Rational compute_Q(std::span<const Point> p);

/// With p = 23 meet 015, q = 13 meet 024, r = 12 meet 345 (raw meet
/// vectors): -[102q][0p3r] + [p02q][013r]. Equals [0123]^2 Q.
/// Throws Degenerate when [0123] = 0.
Rational ceva_incidence_check(std::span<const Point> p);

/// First permutation s of {0..5} in lexicographic order with
/// compute_Q(p[s[0]], ..., p[s[5]]) != 0. Throws NoPermutation.
std::array<int, 6> find_Q_labeling(std::span<const Point> p);

/// The quadric [abcX][defX].
struct BasisQuadric {
  std::array<int, 3> first;
  std::array<int, 3> second;
};

/// (015|234), (012|345), (024|135), (045|123).
const std::array<BasisQuadric, 4>& basis_S();

struct MatrixM {
  std::array<std::array<Rational, 4>, 4> entries;
  /// e.g. "[0156][2346]" for row 0, column 0.
  std::array<std::array<std::string, 4>, 4> provenance;
};

/// M[r][c] = basis quadric c evaluated at point 6 + r.
MatrixM build_M(std::span<const Point> pts);

/// Distinct, no four collinear, [0123][0145][2345][6789] != 0.
bool generic_preconditions(std::span<const Point> pts, std::string* why = nullptr);

/// Vertices 6..9 with unit <v6 + v7 + v8 + v9> on canonical representatives.
Tetrahedron test_tetrahedron(std::span<const Point> pts);

/// Image of column r of M under the map E_i -> point 6+i, 1 -> unit,
/// built from local-parameter points, inverses and products on the edges
/// through the chart vertex. Throws ZeroColumn.
Point construct_test_point(std::span<const Point> pts, const MatrixM& m, int r, Trace* trace = nullptr);

struct GenericOptions {
  bool record_trace = false;
  bool parallel = false;
};

/// Verdict for a labeled configuration meeting generic_preconditions.
/// Throws PreconditionViolated otherwise.
Decision decide_generic(std::span<const Point> pts, const GenericOptions& options = {});

}  // namespace quadsyn
