#include "replan/reopt.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "instance_index.hpp"
#include "replan/errors.hpp"
#include "replan/ilp.hpp"
#include "replan/validate.hpp"

namespace replan {

std::string to_string(Strategy strategy) {
    switch (strategy) {
    case Strategy::BasicPlaster: return "basic";
    case Strategy::SmartPlaster: return "smart";
    case Strategy::PlasterSet: return "set";
    case Strategy::FullRecompute: return "full";
    }
    return "full";
}

std::string to_string(ReoptStatus status) {
    switch (status) {
    case ReoptStatus::Solved: return "solved";
    case ReoptStatus::StrategyInapplicable: return "strategy-inapplicable";
    case ReoptStatus::Infeasible: return "infeasible";
    case ReoptStatus::TimedOut: return "timed-out";
    }
    return "infeasible";
}

EditScript diff(const Solution& original, const Solution& updated) {
    Solution old_sorted = original;
    Solution new_sorted = updated;
    canonicalize(old_sorted);
    canonicalize(new_sorted);

    std::vector<Assignment> removed;
    std::vector<Assignment> added;
    std::set_difference(old_sorted.assignments.begin(), old_sorted.assignments.end(),
        new_sorted.assignments.begin(), new_sorted.assignments.end(), std::back_inserter(removed));
    std::set_difference(new_sorted.assignments.begin(), new_sorted.assignments.end(),
        old_sorted.assignments.begin(), old_sorted.assignments.end(), std::back_inserter(added));

    EditScript script;
    for (const auto& pair : removed)
        script.ops.push_back({EditOp::Kind::Unassign, pair.occurrence_id, pair.ta_id});
    for (const auto& pair : added)
        script.ops.push_back({EditOp::Kind::Assign, pair.occurrence_id, pair.ta_id});
    return script;
}

Solution apply_script(const EditScript& script, const Solution& original) {
    std::set<Assignment> pairs(original.assignments.begin(), original.assignments.end());
    for (const auto& op : script.ops) {
        const Assignment pair{op.occurrence_id, op.ta_id};
        if (op.kind == EditOp::Kind::Unassign) {
            if (pairs.erase(pair) == 0)
                throw Error("edit script unassigns a pair that is not present: " + op.occurrence_id
                    + "/" + op.ta_id);
        } else {
            if (!pairs.insert(pair).second)
                throw Error("edit script assigns a pair that is already present: "
                    + op.occurrence_id + "/" + op.ta_id);
        }
    }
    Solution result;
    result.assignments.assign(pairs.begin(), pairs.end());
    return result;
}

namespace {

struct StrategyOutcome {
    ReoptStatus status = ReoptStatus::Infeasible;
    Solution solution;
    bool has_solution = false;
};

Solution sorted_copy(const Solution& solution) {
    Solution copy = solution;
    canonicalize(copy);
    return copy;
}

std::set<Assignment> ineligible_pairs(const std::vector<Violation>& violations) {
    std::set<Assignment> removed;
    for (const auto& violation : violations)
        if (const auto* v = std::get_if<IneligibleAssignment>(&violation))
            removed.insert({v->occurrence_id, v->ta_id});
    return removed;
}

// Weekly/semester hour bookkeeping for a fixed set of assignments.
struct UsageTable {
    std::map<std::pair<std::string, int>, int> weekly;
    std::map<std::string, int> semester;

    void add(const detail::InstanceIndex& index, const Assignment& pair) {
        const auto& occurrence = *index.occurrence(pair.occurrence_id);
        const int hours = index.hours_of(occurrence);
        weekly[{pair.ta_id, occurrence.week}] += hours;
        semester[pair.ta_id] += hours;
    }

    int week_used(const std::string& ta_id, int week) const {
        auto it = weekly.find({ta_id, week});
        return it == weekly.end() ? 0 : it->second;
    }

    int semester_used(const std::string& ta_id) const {
        auto it = semester.find(ta_id);
        return it == semester.end() ? 0 : it->second;
    }
};

// Accumulates hour-cap constraints over decision variables whose base usage
// comes from frozen assignments.
class CapBuilder {
public:
    CapBuilder(const detail::InstanceIndex& index, const UsageTable& frozen) :
        index_(index), frozen_(frozen) {}

    void add_term(const std::string& ta_id, int week, std::int64_t hours, VarId var) {
        weekly_[{ta_id, week}].push_back({hours, var});
        semester_[ta_id].push_back({hours, var});
    }

    void emit(IlpProblem& problem) const {
        for (const auto& [key, terms] : weekly_) {
            const auto& [ta_id, week] = key;
            LinearConstraint constraint;
            constraint.relation = Relation::LessEq;
            constraint.rhs = index_.ta(ta_id)->max_hours_per_week - frozen_.week_used(ta_id, week);
            constraint.terms = terms;
            constraint.label = "week_" + ta_id + "_w" + std::to_string(week);
            problem.add_constraint(std::move(constraint));
        }
        for (const auto& [ta_id, terms] : semester_) {
            LinearConstraint constraint;
            constraint.relation = Relation::LessEq;
            constraint.rhs =
                index_.ta(ta_id)->max_hours_per_semester - frozen_.semester_used(ta_id);
            constraint.terms = terms;
            constraint.label = "sem_" + ta_id;
            problem.add_constraint(std::move(constraint));
        }
    }

private:
    const detail::InstanceIndex& index_;
    const UsageTable& frozen_;
    std::map<std::pair<std::string, int>, std::vector<LinearTerm>> weekly_;
    std::map<std::string, std::vector<LinearTerm>> semester_;
};

StrategyOutcome from_solve(SolveStatus status) {
    StrategyOutcome outcome;
    outcome.status = status == SolveStatus::Infeasible ? ReoptStatus::Infeasible
                                                       : ReoptStatus::TimedOut;
    return outcome;
}

// Refill the violated slots only; every other assignment is frozen and its
// hours enter the caps as constants.
StrategyOutcome run_basic_plaster(const detail::InstanceIndex& index, const Solution& original,
    const ChangeImpact& impact, const WeightConfig& weights, double time_limit) {
    const auto& local = std::get<LocalViolations>(impact.classification);
    const auto removed = ineligible_pairs(impact.violations);

    std::vector<Assignment> frozen;
    for (const auto& pair : original.assignments)
        if (!removed.count(pair)) frozen.push_back(pair);

    for (const auto& lock : index.instance().locks)
        if (removed.count({lock.occurrence_id, lock.ta_id}))
            return {ReoptStatus::Infeasible, {}, false};

    UsageTable frozen_usage;
    std::set<Assignment> frozen_set(frozen.begin(), frozen.end());
    std::map<std::string, int> frozen_at;
    for (const auto& pair : frozen) {
        frozen_usage.add(index, pair);
        ++frozen_at[pair.occurrence_id];
    }

    IlpProblem problem;
    CapBuilder caps(index, frozen_usage);
    std::vector<Assignment> var_pairs;

    for (const auto& occurrence_id : local.occurrence_ids) {
        const auto& occurrence = *index.occurrence(occurrence_id);
        const auto& session = index.session_of(occurrence);
        const int open =
            session.num_tas_per_session - (frozen_at.count(occurrence_id) ? frozen_at[occurrence_id] : 0);

        LinearConstraint staffing;
        staffing.relation = Relation::Eq;
        staffing.rhs = open;
        staffing.label = "refill_" + occurrence_id;
        for (const auto& ta : index.instance().tas) {
            if (!index.is_eligible(ta.id, occurrence)) continue;
            if (frozen_set.count({occurrence_id, ta.id})) continue;
            const VarId var = problem.add_variable(occurrence_id + "_" + ta.id);
            var_pairs.push_back({occurrence_id, ta.id});
            staffing.terms.push_back({1, var});
            problem.objective().terms.push_back(
                {weights.weight_of(index.rating(ta.id, session.module_id)), var});
            caps.add_term(ta.id, occurrence.week, index.hours_of(occurrence), var);
        }
        problem.add_constraint(std::move(staffing));
    }
    caps.emit(problem);

    const IlpSolution ilp = solve(problem, time_limit);
    if (ilp.status != SolveStatus::Optimal) return from_solve(ilp.status);

    Solution result{frozen};
    for (std::size_t v = 0; v < var_pairs.size(); ++v)
        if (ilp.values[v]) result.assignments.push_back(var_pairs[v]);
    canonicalize(result);
    return {ReoptStatus::Solved, std::move(result), true};
}

// Repair each violated slot by swapping its TA with the TA of one unaffected
// assignment; both crosswise placements must be assignable and all caps must
// hold for the chosen combination.
StrategyOutcome run_smart_plaster(const detail::InstanceIndex& index, const Solution& original,
    const ChangeImpact& impact, const WeightConfig& weights, double time_limit) {
    const auto removed = ineligible_pairs(impact.violations);
    const auto& local = std::get<LocalViolations>(impact.classification);

    std::vector<Assignment> frozen;
    for (const auto& pair : original.assignments)
        if (!removed.count(pair)) frozen.push_back(pair);
    std::set<Assignment> frozen_set(frozen.begin(), frozen.end());

    for (const auto& lock : index.instance().locks)
        if (removed.count({lock.occurrence_id, lock.ta_id}))
            return {ReoptStatus::Infeasible, {}, false};

    // A slot that is open without a removed pair has no TA to swap out.
    std::map<std::string, int> frozen_at;
    for (const auto& pair : frozen) ++frozen_at[pair.occurrence_id];
    for (const auto& occurrence_id : local.occurrence_ids) {
        int open = index.session_of(*index.occurrence(occurrence_id)).num_tas_per_session
            - (frozen_at.count(occurrence_id) ? frozen_at[occurrence_id] : 0);
        int removed_here = 0;
        for (const auto& pair : removed)
            if (pair.occurrence_id == occurrence_id) ++removed_here;
        if (open != removed_here) return {ReoptStatus::Infeasible, {}, false};
    }

    UsageTable frozen_usage;
    for (const auto& pair : frozen) frozen_usage.add(index, pair);

    struct Swap {
        Assignment violating;
        Assignment donor;
    };

    IlpProblem problem;
    std::vector<Swap> swaps;
    std::map<Assignment, std::vector<LinearTerm>> donor_terms;
    std::map<Assignment, std::vector<LinearTerm>> added_pair_terms;
    std::map<std::pair<std::string, int>, std::vector<LinearTerm>> weekly_delta;
    std::map<std::string, std::vector<LinearTerm>> semester_delta;

    for (const auto& violating : removed) {
        const auto& occ_v = *index.occurrence(violating.occurrence_id);
        const auto& session_v = index.session_of(occ_v);
        LinearConstraint one_swap;
        one_swap.relation = Relation::Eq;
        one_swap.rhs = 1;
        one_swap.label = "swap_" + violating.occurrence_id + "_" + violating.ta_id;

        for (const auto& donor : frozen) {
            if (donor.occurrence_id == violating.occurrence_id) continue;
            const auto& occ_d = *index.occurrence(donor.occurrence_id);
            const auto& session_d = index.session_of(occ_d);
            if (!index.is_eligible(donor.ta_id, occ_v)) continue;
            if (!index.is_eligible(violating.ta_id, occ_d)) continue;
            if (frozen_set.count({violating.occurrence_id, donor.ta_id})) continue;
            if (frozen_set.count({donor.occurrence_id, violating.ta_id})) continue;

            const VarId var = problem.add_variable(
                "swap_" + violating.occurrence_id + "_" + violating.ta_id + "__"
                + donor.occurrence_id + "_" + donor.ta_id);
            swaps.push_back({violating, donor});
            one_swap.terms.push_back({1, var});
            donor_terms[donor].push_back({1, var});
            added_pair_terms[{violating.occurrence_id, donor.ta_id}].push_back({1, var});
            added_pair_terms[{donor.occurrence_id, violating.ta_id}].push_back({1, var});

            const int hours_v = index.hours_of(occ_v);
            const int hours_d = index.hours_of(occ_d);
            if (occ_v.week == occ_d.week) {
                if (hours_v != hours_d)
                    weekly_delta[{donor.ta_id, occ_d.week}].push_back({hours_v - hours_d, var});
            } else {
                weekly_delta[{donor.ta_id, occ_d.week}].push_back({-hours_d, var});
                weekly_delta[{donor.ta_id, occ_v.week}].push_back({hours_v, var});
            }
            weekly_delta[{violating.ta_id, occ_d.week}].push_back({hours_d, var});
            if (hours_v != hours_d)
                semester_delta[donor.ta_id].push_back({hours_v - hours_d, var});
            semester_delta[violating.ta_id].push_back({hours_d, var});

            const auto gain = weights.weight_of(index.rating(donor.ta_id, session_v.module_id))
                + weights.weight_of(index.rating(violating.ta_id, session_d.module_id))
                - weights.weight_of(index.rating(donor.ta_id, session_d.module_id));
            problem.objective().terms.push_back({gain, var});
        }
        problem.add_constraint(std::move(one_swap));
    }

    for (const auto& [donor, terms] : donor_terms) {
        LinearConstraint constraint;
        constraint.relation = Relation::LessEq;
        constraint.rhs = 1;
        constraint.terms = terms;
        constraint.label = "donor_" + donor.occurrence_id + "_" + donor.ta_id;
        problem.add_constraint(std::move(constraint));
    }
    for (const auto& [pair, terms] : added_pair_terms) {
        if (terms.size() < 2) continue;
        LinearConstraint constraint;
        constraint.relation = Relation::LessEq;
        constraint.rhs = 1;
        constraint.terms = terms;
        constraint.label = "once_" + pair.occurrence_id + "_" + pair.ta_id;
        problem.add_constraint(std::move(constraint));
    }
    for (const auto& [key, terms] : weekly_delta) {
        const auto& [ta_id, week] = key;
        LinearConstraint constraint;
        constraint.relation = Relation::LessEq;
        constraint.rhs = index.ta(ta_id)->max_hours_per_week - frozen_usage.week_used(ta_id, week);
        constraint.terms = terms;
        constraint.label = "week_" + ta_id + "_w" + std::to_string(week);
        problem.add_constraint(std::move(constraint));
    }
    for (const auto& [ta_id, terms] : semester_delta) {
        LinearConstraint constraint;
        constraint.relation = Relation::LessEq;
        constraint.rhs =
            index.ta(ta_id)->max_hours_per_semester - frozen_usage.semester_used(ta_id);
        constraint.terms = terms;
        constraint.label = "sem_" + ta_id;
        problem.add_constraint(std::move(constraint));
    }

    const IlpSolution ilp = solve(problem, time_limit);
    if (ilp.status != SolveStatus::Optimal) return from_solve(ilp.status);

    std::set<Assignment> pairs(frozen.begin(), frozen.end());
    for (std::size_t v = 0; v < swaps.size(); ++v) {
        if (!ilp.values[v]) continue;
        const auto& swap = swaps[v];
        pairs.erase(swap.donor);
        pairs.insert({swap.violating.occurrence_id, swap.donor.ta_id});
        pairs.insert({swap.donor.occurrence_id, swap.violating.ta_id});
    }
    Solution result;
    result.assignments.assign(pairs.begin(), pairs.end());
    return {ReoptStatus::Solved, std::move(result), true};
}

// Reconsider every assignment of the problematic TA(s): each of their pairs
// gets a keep/drop choice, their slots get reassignment candidates, and a
// keep bonus steers toward minimal disruption. Everything else is frozen.
StrategyOutcome run_plaster_set(const detail::InstanceIndex& index, const Solution& original,
    const ChangeImpact& impact, const WeightConfig& weights, double time_limit) {
    std::set<std::string> problematic;
    std::set<std::string> touched_occurrences;
    for (const auto& violation : impact.violations) {
        if (const auto* v = std::get_if<IneligibleAssignment>(&violation))
            problematic.insert(v->ta_id);
        else if (const auto* v = std::get_if<WeeklyHoursExceeded>(&violation))
            problematic.insert(v->ta_id);
        else if (const auto* v = std::get_if<SemesterHoursExceeded>(&violation))
            problematic.insert(v->ta_id);
        else if (const auto* v = std::get_if<Understaffed>(&violation))
            touched_occurrences.insert(v->occurrence_id);
    }

    std::vector<Assignment> frozen;
    std::vector<Assignment> reconsidered;
    for (const auto& pair : original.assignments) {
        if (problematic.count(pair.ta_id)) {
            reconsidered.push_back(pair);
            touched_occurrences.insert(pair.occurrence_id);
        } else {
            frozen.push_back(pair);
        }
    }
    std::set<Assignment> frozen_set(frozen.begin(), frozen.end());

    UsageTable frozen_usage;
    std::map<std::string, int> frozen_at;
    for (const auto& pair : frozen) {
        frozen_usage.add(index, pair);
        ++frozen_at[pair.occurrence_id];
    }

    IlpProblem problem;
    CapBuilder caps(index, frozen_usage);
    std::vector<Assignment> var_pairs;
    std::vector<std::uint8_t> var_is_keep;
    std::map<std::string, std::vector<LinearTerm>> staffing_terms;
    std::map<Assignment, VarId> pair_var;

    auto add_pair_var = [&](const Assignment& pair, bool keep) {
        const auto& occurrence = *index.occurrence(pair.occurrence_id);
        const VarId var = problem.add_variable(
            std::string(keep ? "keep_" : "assign_") + pair.occurrence_id + "_" + pair.ta_id);
        var_pairs.push_back(pair);
        var_is_keep.push_back(keep);
        pair_var.emplace(pair, var);
        staffing_terms[pair.occurrence_id].push_back({1, var});
        caps.add_term(pair.ta_id, occurrence.week, index.hours_of(occurrence), var);
        const auto weight =
            weights.weight_of(index.rating(pair.ta_id, index.session_of(occurrence).module_id));
        problem.objective().terms.push_back({weight + (keep ? weights.keep_bonus : 0), var});
        return var;
    };

    std::set<Assignment> reconsidered_set(reconsidered.begin(), reconsidered.end());
    for (const auto& pair : reconsidered) {
        const auto& occurrence = *index.occurrence(pair.occurrence_id);
        if (index.is_eligible(pair.ta_id, occurrence)) add_pair_var(pair, true);
        // ineligible original pairs are dropped unconditionally
    }

    for (const auto& occurrence_id : touched_occurrences) {
        const auto& occurrence = *index.occurrence(occurrence_id);
        for (const auto& ta : index.instance().tas) {
            if (!index.is_eligible(ta.id, occurrence)) continue;
            const Assignment pair{occurrence_id, ta.id};
            if (frozen_set.count(pair) || reconsidered_set.count(pair)) continue;
            add_pair_var(pair, false);
        }
    }

    for (const auto& occurrence_id : touched_occurrences) {
        const auto& session = index.session_of(*index.occurrence(occurrence_id));
        LinearConstraint staffing;
        staffing.relation = Relation::Eq;
        staffing.rhs = session.num_tas_per_session
            - (frozen_at.count(occurrence_id) ? frozen_at[occurrence_id] : 0);
        staffing.terms = staffing_terms[occurrence_id];
        staffing.label = "staff_" + occurrence_id;
        problem.add_constraint(std::move(staffing));
    }
    caps.emit(problem);

    for (const auto& lock : index.instance().locks) {
        const Assignment pair{lock.occurrence_id, lock.ta_id};
        if (frozen_set.count(pair)) continue;
        auto it = pair_var.find(pair);
        if (it == pair_var.end()) return {ReoptStatus::Infeasible, {}, false};
        LinearConstraint pin;
        pin.relation = Relation::Eq;
        pin.rhs = 1;
        pin.terms.push_back({1, it->second});
        pin.label = "lock_" + lock.occurrence_id + "_" + lock.ta_id;
        problem.add_constraint(std::move(pin));
    }

    const IlpSolution ilp = solve(problem, time_limit);
    if (ilp.status != SolveStatus::Optimal) return from_solve(ilp.status);

    Solution result{frozen};
    for (std::size_t v = 0; v < var_pairs.size(); ++v)
        if (ilp.values[v]) result.assignments.push_back(var_pairs[v]);
    canonicalize(result);
    return {ReoptStatus::Solved, std::move(result), true};
}

// Re-solve the whole assignment problem, with a bonus on every variable
// whose pair is part of the original solution: dropping a previously chosen
// pair costs exactly that bonus, so the optimum stays as close to the
// original solution as feasibility allows.
StrategyOutcome run_full_recompute(const Instance& instance_prime, const Solution& original,
    const WeightConfig& weights, double time_limit) {
    EncodedProblem encoded;
    try {
        encoded = encode_original(instance_prime, weights);
    } catch (const LockedPairIneligibleError&) {
        return {ReoptStatus::Infeasible, {}, false};
    }

    Solution original_sorted = sorted_copy(original);
    for (auto& term : encoded.problem.objective().terms) {
        const auto& entry = encoded.var_map.pair_of(term.var);
        if (original_sorted.contains({entry.occurrence_id, entry.ta_id}))
            term.coefficient += weights.keep_bonus;
    }

    const IlpSolution ilp = solve(encoded.problem, time_limit);
    if (ilp.status != SolveStatus::Optimal) return from_solve(ilp.status);
    return {ReoptStatus::Solved, decode(encoded.var_map, ilp), true};
}

} // namespace

ReoptResult reoptimise(const Instance& instance_prime, const Solution& original_solution,
    Strategy strategy, const WeightConfig& weights, double time_limit_seconds) {
    if (!(weights.green_weight > weights.amber_weight && weights.amber_weight > 0))
        throw Error("weights must satisfy green > amber > 0");
    const Solution original = sorted_copy(original_solution);
    ReoptResult result;
    result.impact = classify_change(instance_prime, original);

    if (result.impact.is_vacuous()) {
        result.status = ReoptStatus::Solved;
        result.new_solution = original;
        result.kept_count = static_cast<int>(original.size());
        result.total_count = static_cast<int>(original.size());
        result.objective_value = approval_objective(instance_prime, original, weights);
        return result;
    }

    const bool local = result.impact.is_local();
    const bool complex = result.impact.is_complex();
    if ((strategy == Strategy::BasicPlaster || strategy == Strategy::SmartPlaster) && !local) {
        result.status = ReoptStatus::StrategyInapplicable;
        return result;
    }
    if (strategy == Strategy::PlasterSet && complex) {
        result.status = ReoptStatus::StrategyInapplicable;
        return result;
    }

    detail::InstanceIndex index(instance_prime);
    StrategyOutcome outcome;
    switch (strategy) {
    case Strategy::BasicPlaster:
        outcome = run_basic_plaster(index, original, result.impact, weights, time_limit_seconds);
        break;
    case Strategy::SmartPlaster:
        outcome = run_smart_plaster(index, original, result.impact, weights, time_limit_seconds);
        break;
    case Strategy::PlasterSet:
        outcome = run_plaster_set(index, original, result.impact, weights, time_limit_seconds);
        break;
    case Strategy::FullRecompute:
        outcome = run_full_recompute(instance_prime, original, weights, time_limit_seconds);
        break;
    }

    result.status = outcome.status;
    if (outcome.has_solution) {
        result.new_solution = std::move(outcome.solution);
        result.kept_count = shared_assignment_count(original, result.new_solution);
        result.total_count = static_cast<int>(result.new_solution.size());
        result.edit_script = diff(original, result.new_solution);
        result.objective_value = approval_objective(instance_prime, result.new_solution, weights);
    }
    return result;
}

} // namespace replan
