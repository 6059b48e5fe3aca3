#include "replan/scenario.hpp"

#include <algorithm>
#include <map>

#include "instance_index.hpp"
#include "replan/errors.hpp"
#include "replan/reopt.hpp"
#include "replan/rng.hpp"

namespace replan {

namespace {

// Block one assigned pair whose slot is repairable in place: a direct
// substitute must exist and a swap with some unaffected assignment must
// exist, so every local strategy stays viable.
ChangeSet blocked_assigned_pair(const Instance& instance, const Solution& solution, Rng& rng) {
    std::vector<Assignment> candidates = solution.assignments;
    rng.shuffle(candidates);
    for (const auto& pair : candidates) {
        ChangeSet changes;
        changes.changes.push_back(BlockOccurrence{pair.ta_id, pair.occurrence_id});
        const Instance changed = apply_changes(instance, changes, solution);
        const auto impact = classify_change(changed, solution);
        if (!impact.is_local()) continue;
        if (reoptimise(changed, solution, Strategy::BasicPlaster).status != ReoptStatus::Solved)
            continue;
        if (reoptimise(changed, solution, Strategy::SmartPlaster).status != ReoptStatus::Solved)
            continue;
        return changes;
    }
    throw ScenarioUnconstructibleError("no assigned pair admits a slot-by-slot repair");
}

// Cut a TA's weekly cap below their busiest week so that no single dropped
// assignment brings them under it again.
ChangeSet reduced_week_hours(const Instance& instance, const Solution& solution, Rng& rng) {
    detail::InstanceIndex index(instance);

    struct Candidate {
        std::string ta_id;
        int new_cap = 0;
    };
    std::map<std::pair<std::string, int>, std::pair<int, int>> usage; // -> (count, hours)
    std::map<std::pair<std::string, int>, int> heaviest;              // -> max single hours
    for (const auto& pair : solution.assignments) {
        const auto& occurrence = *index.occurrence(pair.occurrence_id);
        const int hours = index.hours_of(occurrence);
        auto& entry = usage[{pair.ta_id, occurrence.week}];
        entry.first += 1;
        entry.second += hours;
        auto& top = heaviest[{pair.ta_id, occurrence.week}];
        top = std::max(top, hours);
    }

    std::vector<Candidate> candidates;
    for (const auto& [key, entry] : usage) {
        const auto& [count, hours] = entry;
        if (count < 3) continue;
        const int new_cap = hours - heaviest.at(key) - 1;
        if (new_cap < 0) continue;
        candidates.push_back({key.first, new_cap});
    }
    rng.shuffle(candidates);

    for (const auto& candidate : candidates) {
        ChangeSet changes;
        changes.changes.push_back(SetMaxWeekHours{candidate.ta_id, candidate.new_cap});
        const Instance changed = apply_changes(instance, changes, solution);
        const auto impact = classify_change(changed, solution);
        if (!impact.is_overload()) continue;
        const auto set_result = reoptimise(changed, solution, Strategy::PlasterSet);
        if (set_result.status != ReoptStatus::Solved) continue;
        if (set_result.kept_count > set_result.total_count - 2) continue; // needs >= 2 moves
        if (reoptimise(changed, solution, Strategy::FullRecompute).status != ReoptStatus::Solved)
            continue;
        return changes;
    }
    throw ScenarioUnconstructibleError("no TA admits a forced multi-slot reallocation");
}

// Block every assigned pair. Verified to still leave some full reassignment,
// which by construction shares nothing with the original solution.
ChangeSet blocked_everything(const Instance& instance, const Solution& solution) {
    if (solution.assignments.empty())
        throw ScenarioUnconstructibleError("empty solution cannot be blocked");
    ChangeSet changes;
    for (const auto& pair : solution.assignments)
        changes.changes.push_back(BlockOccurrence{pair.ta_id, pair.occurrence_id});

    const Instance changed = apply_changes(instance, changes, solution);
    const auto impact = classify_change(changed, solution);
    if (!impact.is_complex())
        throw ScenarioUnconstructibleError("blocking the whole solution is not a complex change here");
    if (reoptimise(changed, solution, Strategy::FullRecompute).status != ReoptStatus::Solved)
        throw ScenarioUnconstructibleError("no alternative solution exists once everything is blocked");
    return changes;
}

// Block a pair that is not assigned; the original solution stays valid.
ChangeSet blocked_unassigned_pair(const Instance& instance, const Solution& solution, Rng& rng) {
    detail::InstanceIndex index(instance);
    std::vector<Assignment> candidates;
    for (const auto& occurrence : instance.occurrences) {
        for (const auto& ta : instance.tas) {
            if (!index.is_eligible(ta.id, occurrence)) continue;
            if (solution.contains({occurrence.id, ta.id})) continue;
            candidates.push_back({occurrence.id, ta.id});
        }
    }
    if (candidates.empty())
        throw ScenarioUnconstructibleError("every assignable pair is already assigned");
    const auto& pair = candidates[static_cast<std::size_t>(
        rng.next_int(0, static_cast<int>(candidates.size()) - 1))];
    ChangeSet changes;
    changes.changes.push_back(BlockOccurrence{pair.ta_id, pair.occurrence_id});
    return changes;
}

} // namespace

ChangeSet generate_scenario(const Instance& instance, const Solution& input_solution, int kind,
    std::uint64_t seed) {
    Solution solution = input_solution;
    canonicalize(solution);
    Rng rng(derive_seed(seed, 100 + static_cast<std::uint64_t>(kind)));
    switch (kind) {
    case 1: return blocked_assigned_pair(instance, solution, rng);
    case 2: return reduced_week_hours(instance, solution, rng);
    case 3: return blocked_everything(instance, solution);
    case 4: return blocked_unassigned_pair(instance, solution, rng);
    default: throw Error("scenario kind must be 1, 2, 3 or 4");
    }
}

} // namespace replan
