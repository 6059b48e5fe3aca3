#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "replan/ilp.hpp"
#include "replan/model.hpp"

namespace replan {

/// Objective weights. The keep bonus is only used by reoptimisation; it must
/// dominate the reachable approval range for keeping to take lexicographic
/// priority over approval quality.
struct WeightConfig {
    std::int64_t green_weight = 2;
    std::int64_t amber_weight = 1;
    std::int64_t keep_bonus = 1000;

    std::int64_t weight_of(ApprovalRating rating) const {
        return rating == ApprovalRating::Green ? green_weight : amber_weight;
    }
};

/// Bijection between decision variables and assignable (occurrence, TA)
/// pairs, along with the approval weight each pair contributes.
class VarMap {
public:
    struct Entry {
        std::string occurrence_id;
        std::string ta_id;
        std::int64_t weight = 0;
    };

    VarId add(Entry entry);

    int size() const { return static_cast<int>(entries_.size()); }
    const Entry& pair_of(VarId var) const { return entries_.at(static_cast<std::size_t>(var.index)); }
    const std::vector<Entry>& entries() const { return entries_; }
    std::optional<VarId> find(const std::string& occurrence_id, const std::string& ta_id) const;

private:
    std::vector<Entry> entries_;
    std::map<std::pair<std::string, std::string>, VarId> index_;
};

struct EncodedProblem {
    IlpProblem problem;
    VarMap var_map;
};

/// Builds the assignment program for an instance: one binary per assignable
/// (occurrence, TA) pair, exact staffing per occurrence, weekly and semester
/// hour caps per TA, locked pairs forced to 1, and an approval-weighted
/// objective. Throws LockedPairIneligibleError when a lock names a pair that
/// has no variable.
EncodedProblem encode_original(const Instance& instance, const WeightConfig& weights = {});

/// Pairs whose variable is 1. Throws StatusNotSolvedError when the solution
/// carries no values.
Solution decode(const VarMap& var_map, const IlpSolution& ilp_solution);

/// Approval-weighted objective of a concrete solution.
std::int64_t approval_objective(const Instance& instance, const Solution& solution,
    const WeightConfig& weights = {});

} // namespace replan
