#include "quadsyn/decision.hpp"

#include <algorithm>
#include <numeric>

#include "quadsyn/error.hpp"

namespace quadsyn {

namespace {

constexpr std::array<std::pair<Branch, std::string_view>, 13> kBranchNames{{
    {Branch::Duplicate, "duplicate"},
    {Branch::FourCollinear, "four-collinear"},
    {Branch::SixOnConic, "six-on-conic"},
    {Branch::Coplanar, "coplanar"},
    {Branch::CoplanarWithTwoLines, "coplanar-with-two-lines"},
    {Branch::ThreeLinesGrassmann, "three-lines-grassmann"},
    {Branch::SharedTransversal, "shared-transversal"},
    {Branch::PlaneLineCase, "plane-line-case"},
    {Branch::TwoLinesGrassmann, "two-lines-grassmann"},
    {Branch::TwoPlanes, "two-planes"},
    {Branch::PlaneComponent, "plane-component"},
    {Branch::Generic, "generic"},
    {Branch::Unresolved, "unresolved"},
}};

Rational dot(const Vec4& h, const Point& p) { return h[0] * p[0] + h[1] * p[1] + h[2] * p[2] + h[3] * p[3]; }

}  // namespace

std::string_view to_string(Branch b) {
  for (const auto& [br, name] : kBranchNames) {
    if (br == b) return name;
  }
  return "unknown";
}

std::optional<Branch> branch_from_string(std::string_view name) {
  for (const auto& [br, n] : kBranchNames) {
    if (n == name) return br;
  }
  return std::nullopt;
}

const std::vector<Branch>& all_branches() {
  static const std::vector<Branch> all = [] {
    std::vector<Branch> v;
    for (const auto& [br, name] : kBranchNames) v.push_back(br);
    return v;
  }();
  return all;
}

Labeling identity_labeling() {
  Labeling l;
  std::iota(l.begin(), l.end(), 0);
  return l;
}

bool is_permutation(const Labeling& l) {
  std::array<bool, 10> seen{};
  for (int v : l) {
    if (v < 0 || v > 9 || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return true;
}

std::vector<Point> apply_labeling(std::span<const Point> pts, const Labeling& l) {
  if (pts.size() != 10 || !is_permutation(l)) fail(ErrorKind::PreconditionViolated, "labeling needs 10 points and a permutation");
  std::vector<Point> out;
  out.reserve(10);
  for (int idx : l) out.push_back(pts[static_cast<std::size_t>(idx)]);
  return out;
}

Labeling compose(const Labeling& first, const Labeling& second) {
  Labeling out;
  for (std::size_t r = 0; r < 10; ++r) out[r] = first[static_cast<std::size_t>(second[r])];
  return out;
}

bool certificate_vanishes(const Certificate& c, std::span<const Point> pts) {
  if (const auto* q = std::get_if<QuadricCoeffs>(&c)) {
    if (std::all_of(q->begin(), q->end(), [](const Rational& v) { return sgn(v) == 0; })) return false;
    return vanishes_on(*q, pts);
  }
  if (const auto* pp = std::get_if<PlanePair>(&c)) {
    if (is_zero(pp->first) || is_zero(pp->second)) return false;
    return std::all_of(pts.begin(), pts.end(),
                       [&](const Point& p) { return sgn(dot(pp->first, p)) == 0 || sgn(dot(pp->second, p)) == 0; });
  }
  return false;
}

Certificate kernel_certificate(std::span<const Point> pts) {
  auto ker = quadric_through(pts);
  if (ker.empty()) return std::monostate{};
  return ker.front();
}

}  // namespace quadsyn
