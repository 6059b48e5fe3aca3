#pragma once

#include <string>
#include <vector>

#include "replan/model.hpp"

namespace replan::test {

// One module, one single-seat occurrence in week 1 (2 hours), three TAs:
// ta1 green, ta2 amber, ta3 without approval (red).
inline Instance single_slot_instance() {
    Instance instance;
    instance.modules = {{"m1", "algebra"}};
    instance.sessions = {{"s1", "m1", 1, 2, {1}}};
    instance.occurrences = {{"s1w1", "s1", 1}};
    instance.tas = {
        {"ta1", "alex", 8, 20},
        {"ta2", "bren", 8, 20},
        {"ta3", "caro", 8, 20},
    };
    instance.approvals = {
        {"ta1", "m1", ApprovalRating::Green},
        {"ta2", "m1", ApprovalRating::Amber},
    };
    canonicalize(instance);
    return instance;
}

// Three single-seat occurrences: two 2-hour ones in week 1, one 1-hour one
// in week 2. Both TAs are green everywhere.
inline Instance three_occurrence_instance() {
    Instance instance;
    instance.modules = {{"m1", "algebra"}};
    instance.sessions = {
        {"s1", "m1", 1, 2, {1}},
        {"s2", "m1", 1, 2, {1}},
        {"s3", "m1", 1, 1, {2}},
    };
    instance.occurrences = {
        {"s1w1", "s1", 1},
        {"s2w1", "s2", 1},
        {"s3w2", "s3", 2},
    };
    instance.tas = {
        {"ta1", "alex", 8, 20},
        {"ta2", "bren", 8, 20},
    };
    instance.approvals = {
        {"ta1", "m1", ApprovalRating::Green},
        {"ta2", "m1", ApprovalRating::Green},
    };
    canonicalize(instance);
    return instance;
}

inline Solution assign_all(const std::vector<std::pair<std::string, std::string>>& pairs) {
    Solution solution;
    for (const auto& [occurrence_id, ta_id] : pairs)
        solution.assignments.push_back({occurrence_id, ta_id});
    canonicalize(solution);
    return solution;
}

} // namespace replan::test
