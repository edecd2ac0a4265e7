#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quadsyn/decision.hpp"

namespace quadsyn {

// Early exits. Each returns a decision when its special position is
// present, nothing otherwise.
std::optional<Decision> qd_duplicates(std::span<const Point> pts);
std::optional<Decision> qd_four_collinear(std::span<const Point> pts);
std::optional<Decision> qd_six_on_plane_conic(std::span<const Point> pts);
std::optional<Decision> qd_three_lines(std::span<const Point> pts);

/// Two skew lines l1, l2 carrying three points each; a, b, c, x the rest,
/// off both lines. Throws PreconditionViolated if the structure is absent.
Decision qd_two_lines(std::span<const Point> pts, const std::array<int, 3>& l1, const std::array<int, 3>& l2,
                      const std::array<int, 4>& rest);

/// Coordinates of coplanar points in a plane chart (one coordinate
/// dropped where the plane's form is nonzero).
std::vector<Vec3> plane_coordinates(std::span<const Point> pts);

/// 6x6 determinant of the conic Veronese rows x^2, xy, xz, y^2, yz, z^2.
Rational conic_determinant(std::span<const Vec3> six);

/// Collinearity of 05.23, 01.34, 45.12; nothing if an intersection is
/// undefined.
std::optional<bool> pascal_collinear(std::span<const Vec3> six);

struct SkewSearch {
  std::optional<Decision> decision;
  Labeling labeling = identity_labeling();
};

/// Relabels so that 01, 23, 45 are mutually skew, or decides.
SkewSearch find_three_skew(std::span<const Point> pts);

/// Points given in role order with 01, 23, 45 skew and 6..9 in a plane.
/// Swaps the points of line `line` (0, 1 or 2) with the roles opposite to
/// {i, j}. Returns the relative relabeling. Throws PreconditionViolated.
Labeling skew_swap(std::span<const Point> pts, int line, int i, int j);

enum class SplitAlternative { CE_DF, CF_DE };

struct SplitResult {
  SplitAlternative alternative;
  Labeling relabel;
  Point g_prime;
  Point h_prime;
};

/// Recombines 23 and 45 into ce, df or cf, de, keeping 01, such that the
/// new lines are skew and pierce the plane off the line gh.
/// Throws InternalInconsistency if neither alternative holds.
SplitResult split_skew(std::span<const Point> pts, const Extensor& plane);

struct Normalized {
  std::optional<Decision> decision;
  Labeling labeling = identity_labeling();
  std::vector<std::string> route;
};

/// Either a decision, or a labeling meeting generic_preconditions.
Normalized normalize(std::span<const Point> pts);

}  // namespace quadsyn
