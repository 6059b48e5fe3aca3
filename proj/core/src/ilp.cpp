#include "replan/ilp.hpp"

#include <algorithm>
#include <chrono>
#include <limits>

#include "replan/errors.hpp"

namespace replan {

std::string to_string(Relation relation) {
    switch (relation) {
    case Relation::LessEq: return "<=";
    case Relation::Eq: return "=";
    case Relation::GreaterEq: return ">=";
    }
    return "<=";
}

std::string to_string(SolveStatus status) {
    switch (status) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::TimedOut: return "timed-out";
    }
    return "infeasible";
}

VarId IlpProblem::add_variable(std::string label) {
    var_labels_.push_back(std::move(label));
    return VarId{static_cast<int>(var_labels_.size()) - 1};
}

void IlpProblem::check() const {
    auto check_terms = [&](const std::vector<LinearTerm>& terms, const std::string& where) {
        std::vector<int> seen;
        seen.reserve(terms.size());
        for (const auto& term : terms) {
            if (term.var.index < 0 || term.var.index >= var_count())
                throw MalformedProblemError("dangling variable in " + where);
            seen.push_back(term.var.index);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw MalformedProblemError("duplicate variable in " + where);
    };
    for (std::size_t i = 0; i < constraints_.size(); ++i) {
        const auto& constraint = constraints_[i];
        check_terms(constraint.terms,
            constraint.label.empty() ? "constraint #" + std::to_string(i) : constraint.label);
    }
    check_terms(objective_.terms, "objective");
}

bool satisfies_all(const IlpProblem& problem, const std::vector<std::uint8_t>& values) {
    for (const auto& constraint : problem.constraints()) {
        std::int64_t sum = 0;
        for (const auto& term : constraint.terms)
            sum += term.coefficient * values[static_cast<std::size_t>(term.var.index)];
        switch (constraint.relation) {
        case Relation::LessEq:
            if (sum > constraint.rhs) return false;
            break;
        case Relation::Eq:
            if (sum != constraint.rhs) return false;
            break;
        case Relation::GreaterEq:
            if (sum < constraint.rhs) return false;
            break;
        }
    }
    return true;
}

std::int64_t evaluate_objective(const IlpProblem& problem, const std::vector<std::uint8_t>& values) {
    std::int64_t sum = problem.objective().constant;
    for (const auto& term : problem.objective().terms)
        sum += term.coefficient * values[static_cast<std::size_t>(term.var.index)];
    return sum;
}

namespace {

constexpr std::int8_t kUnfixed = -1;

struct ConstraintState {
    Relation relation = Relation::LessEq;
    std::int64_t rhs = 0;
    std::int64_t fixed_sum = 0;   // contribution of fixed variables
    std::int64_t pos_unfixed = 0; // sum of positive coefficients over unfixed vars
    std::int64_t neg_unfixed = 0; // sum of negative coefficients over unfixed vars
    std::vector<LinearTerm> terms;

    std::int64_t min_possible() const { return fixed_sum + neg_unfixed; }
    std::int64_t max_possible() const { return fixed_sum + pos_unfixed; }
};

struct VarOccurrence {
    int constraint = 0;
    std::int64_t coefficient = 0;
};

// Cardinality group derived from an all-unit-coefficient constraint
// `sum(x in members) <= / = need`: at most `need - ones` of the unfixed
// members can still be 1, which bounds their objective contribution by the
// top coefficients among them. `exact` marks groups covering a whole
// equality constraint, where the remaining ones are forced, so negative
// coefficients count too.
struct Group {
    std::int64_t need = 0;
    bool exact = false;
    std::vector<std::pair<std::int64_t, int>> members_by_weight; // (obj coeff, var) desc
};

class Solver {
public:
    Solver(const IlpProblem& problem, double time_limit_seconds)
        : n_(problem.var_count()),
          objective_constant_(problem.objective().constant),
          deadline_(std::chrono::steady_clock::now()
              + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                  std::chrono::duration<double>(time_limit_seconds))) {
        obj_.assign(static_cast<std::size_t>(n_), 0);
        for (const auto& term : problem.objective().terms)
            obj_[static_cast<std::size_t>(term.var.index)] = term.coefficient;

        constraints_.reserve(problem.constraints().size());
        occurrences_.assign(static_cast<std::size_t>(n_), {});
        for (const auto& constraint : problem.constraints()) {
            ConstraintState state;
            state.relation = constraint.relation;
            state.rhs = constraint.rhs;
            state.terms = constraint.terms;
            for (const auto& term : constraint.terms) {
                if (term.coefficient > 0)
                    state.pos_unfixed += term.coefficient;
                else
                    state.neg_unfixed += term.coefficient;
                occurrences_[static_cast<std::size_t>(term.var.index)].push_back(
                    {static_cast<int>(constraints_.size()), term.coefficient});
            }
            constraints_.push_back(std::move(state));
        }

        build_groups(problem);

        branch_order_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v) branch_order_[static_cast<std::size_t>(v)] = v;
        std::stable_sort(branch_order_.begin(), branch_order_.end(), [&](int a, int b) {
            const auto wa = std::abs(obj_[static_cast<std::size_t>(a)]);
            const auto wb = std::abs(obj_[static_cast<std::size_t>(b)]);
            if (wa != wb) return wa > wb;
            return a < b;
        });

        value_.assign(static_cast<std::size_t>(n_), kUnfixed);
        in_queue_.assign(constraints_.size(), 0);
    }

    IlpSolution run() {
        IlpSolution result;
        if (propagate_all()) {
            search();
        }
        result.nodes_explored = nodes_;
        result.incumbent_values = incumbent_history_;
        if (timed_out_) {
            result.status = SolveStatus::TimedOut;
            if (has_incumbent_) {
                result.values = best_values_;
                result.objective_value = best_value_;
            }
        } else if (has_incumbent_) {
            result.status = SolveStatus::Optimal;
            result.values = best_values_;
            result.objective_value = best_value_;
        } else {
            result.status = SolveStatus::Infeasible;
        }
        return result;
    }

private:
    void build_groups(const IlpProblem& problem) {
        group_of_.assign(static_cast<std::size_t>(n_), -1);
        auto try_constraint = [&](const LinearConstraint& constraint, bool equality) {
            if (constraint.terms.empty() || constraint.rhs < 1) return;
            for (const auto& term : constraint.terms)
                if (term.coefficient != 1) return;
            std::vector<std::pair<std::int64_t, int>> members;
            for (const auto& term : constraint.terms) {
                if (group_of_[static_cast<std::size_t>(term.var.index)] == -1)
                    members.emplace_back(obj_[static_cast<std::size_t>(term.var.index)],
                        term.var.index);
            }
            if (members.empty()) return;
            Group group;
            group.need = constraint.rhs;
            group.exact = equality && members.size() == constraint.terms.size();
            std::stable_sort(members.begin(), members.end(),
                [](const auto& a, const auto& b) { return a.first > b.first; });
            group.members_by_weight = std::move(members);
            const int id = static_cast<int>(groups_.size());
            for (const auto& [coeff, var] : group.members_by_weight)
                group_of_[static_cast<std::size_t>(var)] = id;
            groups_.push_back(std::move(group));
        };
        for (const auto& constraint : problem.constraints())
            if (constraint.relation == Relation::Eq) try_constraint(constraint, true);
        for (const auto& constraint : problem.constraints())
            if (constraint.relation == Relation::LessEq) try_constraint(constraint, false);
        group_ones_.assign(groups_.size(), 0);
    }

    bool fix(int var, std::int8_t val) {
        auto& current = value_[static_cast<std::size_t>(var)];
        if (current != kUnfixed) return current == val;
        current = val;
        trail_.push_back(var);
        if (val == 1) {
            fixed_objective_ += obj_[static_cast<std::size_t>(var)];
            const int group = group_of_[static_cast<std::size_t>(var)];
            if (group >= 0) ++group_ones_[static_cast<std::size_t>(group)];
        }
        for (const auto& occurrence : occurrences_[static_cast<std::size_t>(var)]) {
            auto& state = constraints_[static_cast<std::size_t>(occurrence.constraint)];
            if (occurrence.coefficient > 0)
                state.pos_unfixed -= occurrence.coefficient;
            else
                state.neg_unfixed -= occurrence.coefficient;
            state.fixed_sum += occurrence.coefficient * val;
            enqueue(occurrence.constraint);
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const int var = trail_.back();
            trail_.pop_back();
            const std::int8_t val = value_[static_cast<std::size_t>(var)];
            value_[static_cast<std::size_t>(var)] = kUnfixed;
            if (val == 1) {
                fixed_objective_ -= obj_[static_cast<std::size_t>(var)];
                const int group = group_of_[static_cast<std::size_t>(var)];
                if (group >= 0) --group_ones_[static_cast<std::size_t>(group)];
            }
            for (const auto& occurrence : occurrences_[static_cast<std::size_t>(var)]) {
                auto& state = constraints_[static_cast<std::size_t>(occurrence.constraint)];
                if (occurrence.coefficient > 0)
                    state.pos_unfixed += occurrence.coefficient;
                else
                    state.neg_unfixed += occurrence.coefficient;
                state.fixed_sum -= occurrence.coefficient * val;
            }
        }
    }

    void enqueue(int constraint) {
        if (!in_queue_[static_cast<std::size_t>(constraint)]) {
            in_queue_[static_cast<std::size_t>(constraint)] = 1;
            queue_.push_back(constraint);
        }
    }

    void clear_queue() {
        for (int constraint : queue_) in_queue_[static_cast<std::size_t>(constraint)] = 0;
        queue_.clear();
    }

    bool propagate_all() {
        for (int c = 0; c < static_cast<int>(constraints_.size()); ++c) enqueue(c);
        return propagate();
    }

    // Bound propagation to a fixpoint. Returns false on conflict.
    bool propagate() {
        while (!queue_.empty()) {
            const int index = queue_.back();
            queue_.pop_back();
            in_queue_[static_cast<std::size_t>(index)] = 0;
            auto& state = constraints_[static_cast<std::size_t>(index)];

            const bool upper = state.relation != Relation::GreaterEq; // LE or EQ
            const bool lower = state.relation != Relation::LessEq;    // GE or EQ
            if (upper && state.min_possible() > state.rhs) return clear_queue(), false;
            if (lower && state.max_possible() < state.rhs) return clear_queue(), false;

            for (const auto& term : state.terms) {
                if (value_[static_cast<std::size_t>(term.var.index)] != kUnfixed) continue;
                const auto c = term.coefficient;
                if (upper) {
                    if (c > 0 && state.min_possible() + c > state.rhs) {
                        if (!fix(term.var.index, 0)) return clear_queue(), false;
                        continue;
                    }
                    if (c < 0 && state.min_possible() - c > state.rhs) {
                        if (!fix(term.var.index, 1)) return clear_queue(), false;
                        continue;
                    }
                }
                if (lower) {
                    if (c > 0 && state.max_possible() - c < state.rhs) {
                        if (!fix(term.var.index, 1)) return clear_queue(), false;
                        continue;
                    }
                    if (c < 0 && state.max_possible() + c < state.rhs) {
                        if (!fix(term.var.index, 0)) return clear_queue(), false;
                        continue;
                    }
                }
            }
        }
        return true;
    }

    // Admissible objective bound at the current node. Cardinality groups
    // cap each staffing block at its top remaining coefficients; everything
    // outside a group falls back to the sum of positive coefficients.
    std::int64_t bound() const {
        std::int64_t total = fixed_objective_ + objective_constant_;
        for (std::size_t g = 0; g < groups_.size(); ++g) {
            const auto& group = groups_[g];
            std::int64_t remaining = group.need - group_ones_[g];
            if (remaining <= 0) continue;
            for (const auto& [coeff, var] : group.members_by_weight) {
                if (value_[static_cast<std::size_t>(var)] != kUnfixed) continue;
                if (!group.exact && coeff <= 0) break; // sorted desc, rest not helpful
                total += coeff;
                if (--remaining == 0) break;
            }
        }
        for (int v = 0; v < n_; ++v) {
            if (value_[static_cast<std::size_t>(v)] != kUnfixed) continue;
            if (group_of_[static_cast<std::size_t>(v)] != -1) continue;
            const auto coeff = obj_[static_cast<std::size_t>(v)];
            if (coeff > 0) total += coeff;
        }
        return total;
    }

    bool out_of_time() {
        if (timed_out_) return true;
        if ((nodes_ & 1023u) == 1u && std::chrono::steady_clock::now() >= deadline_)
            timed_out_ = true;
        return timed_out_;
    }

    int pick_branch_var() const {
        for (int var : branch_order_)
            if (value_[static_cast<std::size_t>(var)] == kUnfixed) return var;
        return -1;
    }

    void search() {
        ++nodes_;
        if (out_of_time()) return;
        if (has_incumbent_ && bound() <= best_value_) return;

        const int var = pick_branch_var();
        if (var == -1) {
            const std::int64_t value = fixed_objective_ + objective_constant_;
            if (!has_incumbent_ || value > best_value_) {
                has_incumbent_ = true;
                best_value_ = value;
                best_values_.assign(static_cast<std::size_t>(n_), 0);
                for (int v = 0; v < n_; ++v)
                    best_values_[static_cast<std::size_t>(v)] =
                        static_cast<std::uint8_t>(value_[static_cast<std::size_t>(v)] == 1);
                incumbent_history_.push_back(value);
            }
            return;
        }

        for (const std::int8_t branch_value : {std::int8_t{1}, std::int8_t{0}}) {
            const std::size_t mark = trail_.size();
            if (fix(var, branch_value) && propagate()) {
                search();
            } else {
                clear_queue();
            }
            undo_to(mark);
            if (timed_out_) return;
        }
    }

    int n_;
    std::int64_t objective_constant_ = 0;
    std::vector<std::int64_t> obj_;
    std::vector<ConstraintState> constraints_;
    std::vector<std::vector<VarOccurrence>> occurrences_;
    std::vector<int> branch_order_;
    std::vector<Group> groups_;
    std::vector<int> group_of_;
    std::vector<std::int64_t> group_ones_;

    std::vector<std::int8_t> value_;
    std::vector<int> trail_;
    std::vector<int> queue_;
    std::vector<std::uint8_t> in_queue_;
    std::int64_t fixed_objective_ = 0;

    bool has_incumbent_ = false;
    std::int64_t best_value_ = std::numeric_limits<std::int64_t>::min();
    std::vector<std::uint8_t> best_values_;
    std::vector<std::int64_t> incumbent_history_;

    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
    std::chrono::steady_clock::time_point deadline_;
};

} // namespace

IlpSolution solve(const IlpProblem& problem, double time_limit_seconds) {
    problem.check();
    Solver solver(problem, time_limit_seconds);
    return solver.run();
}

} // namespace replan
