#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace replan {

/// Dense 0-based index of a binary decision variable.
struct VarId {
    int index = -1;

    auto operator<=>(const VarId&) const = default;
};

enum class Relation { LessEq, Eq, GreaterEq };

std::string to_string(Relation relation);

struct LinearTerm {
    std::int64_t coefficient = 0;
    VarId var;

    auto operator<=>(const LinearTerm&) const = default;
};

struct LinearConstraint {
    std::vector<LinearTerm> terms; // no duplicate vars
    Relation relation = Relation::LessEq;
    std::int64_t rhs = 0;
    std::string label;
};

/// Linear objective, always maximised. All coefficients are integers so no
/// tolerance is involved anywhere in the solver.
struct Objective {
    std::vector<LinearTerm> terms;
    std::int64_t constant = 0;
};

/// A 0/1 integer linear program.
class IlpProblem {
public:
    VarId add_variable(std::string label);

    int var_count() const { return static_cast<int>(var_labels_.size()); }
    const std::string& label(VarId var) const { return var_labels_.at(static_cast<std::size_t>(var.index)); }
    const std::vector<std::string>& var_labels() const { return var_labels_; }

    void add_constraint(LinearConstraint constraint) { constraints_.push_back(std::move(constraint)); }
    const std::vector<LinearConstraint>& constraints() const { return constraints_; }

    Objective& objective() { return objective_; }
    const Objective& objective() const { return objective_; }

    /// Throws MalformedProblemError on dangling variables or duplicate
    /// variables within a constraint or the objective.
    void check() const;

private:
    std::vector<std::string> var_labels_;
    std::vector<LinearConstraint> constraints_;
    Objective objective_;
};

enum class SolveStatus { Optimal, Infeasible, TimedOut };

std::string to_string(SolveStatus status);

struct IlpSolution {
    SolveStatus status = SolveStatus::Infeasible;
    std::vector<std::uint8_t> values; // 0/1 per variable; empty when no point is available
    std::int64_t objective_value = 0;

    // Incumbent objective values in the order they were found. Diagnostic;
    // strictly increasing and bounded by objective_value.
    std::vector<std::int64_t> incumbent_values;

    std::uint64_t nodes_explored = 0;

    bool has_values() const { return !values.empty(); }
};

/// Exact depth-first branch-and-bound over the binaries.
///
/// Deterministic: branch order is descending |objective coefficient| with
/// ties broken by variable index, value 1 is tried first, and an incumbent is
/// only replaced by a strictly better one, so among equal-objective optima
/// the first one in branch order wins.
IlpSolution solve(const IlpProblem& problem, double time_limit_seconds = 60.0);

/// Re-evaluates a 0/1 point against every constraint.
bool satisfies_all(const IlpProblem& problem, const std::vector<std::uint8_t>& values);

/// Objective value of a 0/1 point (including the constant offset).
std::int64_t evaluate_objective(const IlpProblem& problem, const std::vector<std::uint8_t>& values);

} // namespace replan
