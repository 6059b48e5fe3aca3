#include "replan/encoder.hpp"

#include <map>

#include "instance_index.hpp"
#include "replan/errors.hpp"
#include "replan/validate.hpp"

namespace replan {

VarId VarMap::add(Entry entry) {
    const VarId var{static_cast<int>(entries_.size())};
    index_.emplace(std::make_pair(entry.occurrence_id, entry.ta_id), var);
    entries_.push_back(std::move(entry));
    return var;
}

std::optional<VarId> VarMap::find(const std::string& occurrence_id, const std::string& ta_id) const {
    auto it = index_.find({occurrence_id, ta_id});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

EncodedProblem encode_original(const Instance& instance, const WeightConfig& weights) {
    if (!(weights.green_weight > weights.amber_weight && weights.amber_weight > 0))
        throw Error("weights must satisfy green > amber > 0");
    detail::InstanceIndex index(instance);
    EncodedProblem encoded;
    auto& problem = encoded.problem;
    auto& var_map = encoded.var_map;

    // One binary per assignable pair; exactly the required seats per
    // occurrence. Ineligible pairs get no variable at all.
    for (const auto& occurrence : instance.occurrences) {
        LinearConstraint staffing;
        staffing.relation = Relation::Eq;
        staffing.rhs = index.session_of(occurrence).num_tas_per_session;
        staffing.label = "staff_" + occurrence.id;
        const auto module_id = index.session_of(occurrence).module_id;
        for (const auto& ta : instance.tas) {
            if (!index.is_eligible(ta.id, occurrence)) continue;
            const auto rating = index.rating(ta.id, module_id);
            const auto weight = weights.weight_of(rating);
            const VarId var = problem.add_variable(occurrence.id + "_" + ta.id);
            var_map.add({occurrence.id, ta.id, weight});
            staffing.terms.push_back({1, var});
            problem.objective().terms.push_back({weight, var});
        }
        problem.add_constraint(std::move(staffing));
    }

    // Hour caps per (TA, week) and per TA.
    std::map<std::pair<std::string, int>, LinearConstraint> weekly;
    std::map<std::string, LinearConstraint> semester;
    for (int v = 0; v < var_map.size(); ++v) {
        const auto& entry = var_map.pair_of(VarId{v});
        const auto& occurrence = *index.occurrence(entry.occurrence_id);
        const int hours = index.hours_of(occurrence);
        weekly[{entry.ta_id, occurrence.week}].terms.push_back({hours, VarId{v}});
        semester[entry.ta_id].terms.push_back({hours, VarId{v}});
    }
    for (auto& [key, constraint] : weekly) {
        const auto& [ta_id, week] = key;
        constraint.relation = Relation::LessEq;
        constraint.rhs = index.ta(ta_id)->max_hours_per_week;
        constraint.label = "week_" + ta_id + "_w" + std::to_string(week);
        problem.add_constraint(std::move(constraint));
    }
    for (auto& [ta_id, constraint] : semester) {
        constraint.relation = Relation::LessEq;
        constraint.rhs = index.ta(ta_id)->max_hours_per_semester;
        constraint.label = "sem_" + ta_id;
        problem.add_constraint(std::move(constraint));
    }

    // Locked pairs are forced, not substituted, so downstream kept-pair
    // accounting sees them like any other variable.
    for (const auto& lock : instance.locks) {
        const auto var = var_map.find(lock.occurrence_id, lock.ta_id);
        if (!var) throw LockedPairIneligibleError(lock.occurrence_id, lock.ta_id);
        LinearConstraint pin;
        pin.relation = Relation::Eq;
        pin.rhs = 1;
        pin.label = "lock_" + lock.occurrence_id + "_" + lock.ta_id;
        pin.terms.push_back({1, *var});
        problem.add_constraint(std::move(pin));
    }

    return encoded;
}

Solution decode(const VarMap& var_map, const IlpSolution& ilp_solution) {
    if (!ilp_solution.has_values())
        throw StatusNotSolvedError(
            "cannot decode a solution with status " + to_string(ilp_solution.status));
    Solution solution;
    for (int v = 0; v < var_map.size(); ++v) {
        if (ilp_solution.values[static_cast<std::size_t>(v)]) {
            const auto& entry = var_map.pair_of(VarId{v});
            solution.assignments.push_back({entry.occurrence_id, entry.ta_id});
        }
    }
    canonicalize(solution);
    return solution;
}

std::int64_t approval_objective(const Instance& instance, const Solution& solution,
    const WeightConfig& weights) {
    detail::InstanceIndex index(instance);
    std::int64_t total = 0;
    for (const auto& assignment : solution.assignments) {
        const auto* occurrence = index.occurrence(assignment.occurrence_id);
        if (!occurrence)
            throw DanglingReferenceError(
                "solution references unknown occurrence '" + assignment.occurrence_id + "'");
        const auto rating = index.rating(assignment.ta_id, index.session_of(*occurrence).module_id);
        total += weights.weight_of(rating);
    }
    return total;
}

} // namespace replan
