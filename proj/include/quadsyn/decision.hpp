#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "quadsyn/oracle.hpp"
#include "quadsyn/trace.hpp"

namespace quadsyn {

/// Exit points of the decision procedure. The JSON names are stable.
enum class Branch {
  Duplicate,             // "duplicate"
  FourCollinear,         // "four-collinear"
  SixOnConic,            // "six-on-conic"
  Coplanar,              // "coplanar"
  CoplanarWithTwoLines,  // "coplanar-with-two-lines"
  ThreeLinesGrassmann,   // "three-lines-grassmann"
  SharedTransversal,     // "shared-transversal"
  PlaneLineCase,         // "plane-line-case"
  TwoLinesGrassmann,     // "two-lines-grassmann"
  TwoPlanes,             // "two-planes"
  PlaneComponent,        // "plane-component"
  Generic,               // "generic"
  Unresolved,            // "unresolved"
};

std::string_view to_string(Branch b);
std::optional<Branch> branch_from_string(std::string_view name);
const std::vector<Branch>& all_branches();

/// Labeling[role] = index of the input point playing that role.
using Labeling = std::array<int, 10>;

Labeling identity_labeling();
bool is_permutation(const Labeling& l);
/// out[role] = pts[l[role]].
std::vector<Point> apply_labeling(std::span<const Point> pts, const Labeling& l);
/// Labeling of the original points after relabeling the roles of
/// apply_labeling(pts, first) by second.
Labeling compose(const Labeling& first, const Labeling& second);

struct PlanePair {
  Vec4 first;
  Vec4 second;
};

using Certificate = std::variant<std::monostate, QuadricCoeffs, PlanePair>;

bool certificate_vanishes(const Certificate& c, std::span<const Point> pts);

struct Decision {
  bool on_quadric = false;
  Branch branch = Branch::Unresolved;
  Labeling labeling = identity_labeling();
  Certificate certificate;
  std::optional<Trace> trace;
  std::vector<std::string> route;
  bool flagged = false;
};

/// Some quadric through all points (first kernel vector of N), or
/// monostate if there is none.
Certificate kernel_certificate(std::span<const Point> pts);

}  // namespace quadsyn
