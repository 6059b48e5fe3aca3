#pragma once

#include <cstdint>

#include "replan/change.hpp"
#include "replan/model.hpp"

namespace replan {

/// Contextual-change generators, one per scenario kind:
///   1: block one assigned pair, verified repairable slot by slot (both a
///      direct substitute and a swap partner exist);
///   2: cut one TA's weekly hour cap below their current usage so that at
///      least two of their assignments must move;
///   3: block every assigned pair, verified to still admit a full
///      reassignment (nothing of the original solution can be kept);
///   4: block one pair that is not assigned, which changes nothing.
///
/// Deterministic in (instance, solution, seed). Throws
/// ScenarioUnconstructibleError when the instance admits no such change.
ChangeSet generate_scenario(const Instance& instance, const Solution& solution, int kind,
    std::uint64_t seed);

} // namespace replan
