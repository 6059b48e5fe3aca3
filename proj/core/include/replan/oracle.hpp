#pragma once

#include <atomic>
#include <cstdint>
#include <optional>

#include "replan/encoder.hpp"
#include "replan/model.hpp"

namespace replan {

/// Reference results computed by exhaustive enumeration. Test-only by
/// intent; deliberately independent of the encoder and the solver.
struct OracleOptimum {
    Solution solution;
    std::int64_t objective = 0;
};

struct OracleMinPerturbation {
    Solution solution;
    int kept_count = 0;
    std::int64_t objective = 0;
};

/// Enumerates, per occurrence, every TA subset of the required size over the
/// eligible TAs, filters by hour caps and locks, and returns a maximum-weight
/// feasible solution (ties broken toward the lexicographically smallest
/// assignment set). nullopt when no feasible solution exists.
///
/// Guarded: throws TooLargeError when the enumeration would exceed ~2^20
/// candidates. The optional token cancels cooperatively (CancelledError).
std::optional<OracleOptimum> brute_force_optimum(const Instance& instance,
    const WeightConfig& weights = {}, const std::atomic<bool>* cancel = nullptr);

/// Among all feasible solutions of the changed instance, maximises
/// (kept pairs, approval objective) lexicographically.
std::optional<OracleMinPerturbation> brute_force_min_perturbation(const Instance& instance_prime,
    const Solution& original_solution, const WeightConfig& weights = {},
    const std::atomic<bool>* cancel = nullptr);

} // namespace replan
