#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "replan/change.hpp"
#include "replan/encoder.hpp"
#include "replan/model.hpp"

namespace replan {

/// Repair strategies, from most local to most global:
///   - BasicPlaster: refill only the violated slots, everything else frozen.
///   - SmartPlaster: repair each violated slot by swapping its TA with the TA
///     of one unaffected assignment.
///   - PlasterSet: reconsider every assignment of the problematic TA(s),
///     keeping as many as possible.
///   - FullRecompute: re-solve the whole problem with a bonus for keeping
///     pairs of the original solution.
enum class Strategy { BasicPlaster, SmartPlaster, PlasterSet, FullRecompute };

std::string to_string(Strategy strategy);

enum class ReoptStatus { Solved, StrategyInapplicable, Infeasible, TimedOut };

std::string to_string(ReoptStatus status);

struct EditOp {
    enum class Kind { Unassign, Assign };

    Kind kind = Kind::Unassign;
    std::string occurrence_id;
    std::string ta_id;

    auto operator<=>(const EditOp&) const = default;
};

/// Ordered unassign/assign operations turning one solution into another.
/// All unassigns precede all assigns.
struct EditScript {
    std::vector<EditOp> ops;

    bool operator==(const EditScript&) const = default;

    bool empty() const { return ops.empty(); }
    std::size_t size() const { return ops.size(); }
};

struct ReoptResult {
    ReoptStatus status = ReoptStatus::Infeasible;
    ChangeImpact impact;
    Solution new_solution;        // meaningful when status is Solved
    int kept_count = 0;           // |new ∩ original|
    int total_count = 0;          // |new|
    EditScript edit_script;       // original -> new
    std::int64_t objective_value = 0; // approval objective of the new solution
};

/// Derives and solves the repair problem for the given strategy against the
/// changed instance. A vacuous change returns the original solution unchanged
/// under every strategy.
ReoptResult reoptimise(const Instance& instance_prime, const Solution& original_solution,
    Strategy strategy, const WeightConfig& weights = {}, double time_limit_seconds = 60.0);

/// Unassigns for pairs only in `original`, then assigns for pairs only in
/// `updated`, each group sorted by (occurrence, ta).
EditScript diff(const Solution& original, const Solution& updated);

/// Replays a script. Throws Error when an op does not apply cleanly
/// (unassigning a missing pair or assigning a duplicate).
Solution apply_script(const EditScript& script, const Solution& original);

} // namespace replan
