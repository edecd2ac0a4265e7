#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "quadsyn/pipeline.hpp"

namespace quadsyn {

/// on-quadric, generic, qd-branch:<branch> for every branch except
/// unresolved, and case:<tag> for the sub-cases of the coplanar analysis.
const std::vector<std::string>& fixture_kinds();
bool is_fixture_kind(std::string_view kind);

/// The route tag a case:<tag> fixture is built to reach, e.g. "B3c".
const std::vector<std::string>& case_tags();

/// Deterministic configuration of ten points. Throws Parse for an unknown
/// kind.
Config make_fixture(std::string_view kind, std::uint64_t seed);

enum class Mutation { Duplicate, CollinearCollapse, CoplanarCollapse };

/// Pulls some points into special position.
Config mutate(const Config& base, Mutation m, std::uint64_t seed);

/// Item `index` of a fuzz run: on-quadric, generic, a random fixture kind,
/// or a mutation of an on-quadric or generic sample.
Config fuzz_config(std::uint64_t seed, std::uint64_t index);

}  // namespace quadsyn
