#include "replan/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "instance_index.hpp"
#include "replan/errors.hpp"

namespace replan {

namespace {

constexpr std::uint64_t kEnumerationGuard = 1ull << 20;

struct Slot {
    const SessionOccurrence* occurrence = nullptr;
    int need = 0;
    int hours = 0;
    std::vector<std::string> eligible;   // sorted
    std::vector<std::string> locked_tas; // must all appear in the chosen subset
};

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > (1ull << 40)) return 1ull << 40;
    }
    return result;
}

// Shared exhaustive search over per-occurrence TA subsets. `better` decides
// whether a completed candidate beats the best one so far; candidates are
// produced in lexicographic assignment order, so keeping only strict
// improvements leaves the lexicographically smallest optimum.
class Enumerator {
public:
    Enumerator(const Instance& instance, const WeightConfig& weights,
        const std::atomic<bool>* cancel)
        : index_(instance), weights_(weights), cancel_(cancel) {
        std::map<std::string, std::vector<std::string>> locks_by_occurrence;
        for (const auto& lock : instance.locks)
            locks_by_occurrence[lock.occurrence_id].push_back(lock.ta_id);

        std::uint64_t space = 1;
        for (const auto& occurrence : instance.occurrences) {
            Slot slot;
            slot.occurrence = &occurrence;
            const auto& session = index_.session_of(occurrence);
            slot.need = session.num_tas_per_session;
            slot.hours = session.hours_per_occurrence;
            for (const auto& ta : instance.tas)
                if (index_.is_eligible(ta.id, occurrence)) slot.eligible.push_back(ta.id);
            if (auto it = locks_by_occurrence.find(occurrence.id); it != locks_by_occurrence.end())
                slot.locked_tas = it->second;

            space *= binomial_capped(slot.eligible.size(), static_cast<std::uint64_t>(slot.need));
            if (space > kEnumerationGuard)
                throw TooLargeError("enumeration space exceeds the oracle guard");
            if (space == 0) infeasible_by_construction_ = true;
            slots_.push_back(std::move(slot));
        }
    }

    template <typename Better>
    bool enumerate(const Better& better) {
        if (infeasible_by_construction_) return false;
        found_ = false;
        better_ = [&](const Solution& candidate) { return better(candidate); };
        descend(0);
        return found_;
    }

    const Solution& best() const { return best_; }

private:
    void descend(std::size_t slot_index) {
        if (cancel_ && cancel_->load(std::memory_order_relaxed))
            throw CancelledError("oracle enumeration cancelled");
        if (slot_index == slots_.size()) {
            Solution candidate;
            candidate.assignments = current_;
            std::sort(candidate.assignments.begin(), candidate.assignments.end());
            if (better_(candidate)) {
                best_ = std::move(candidate);
                found_ = true;
            }
            return;
        }
        choose(slot_index, 0, slots_[slot_index].need);
    }

    void choose(std::size_t slot_index, std::size_t from, int remaining) {
        const Slot& slot = slots_[slot_index];
        if (remaining == 0) {
            for (const auto& ta_id : slot.locked_tas) {
                bool present = false;
                for (std::size_t i = current_.size() - static_cast<std::size_t>(slot.need);
                     i < current_.size(); ++i)
                    if (current_[i].ta_id == ta_id) present = true;
                if (!present) return;
            }
            descend(slot_index + 1);
            return;
        }
        if (slot.eligible.size() - from < static_cast<std::size_t>(remaining)) return;
        for (std::size_t i = from; i < slot.eligible.size(); ++i) {
            const auto& ta_id = slot.eligible[i];
            const int week = slot.occurrence->week;
            auto& weekly = weekly_hours_[{ta_id, week}];
            auto& semester = semester_hours_[ta_id];
            const auto* ta = index_.ta(ta_id);
            if (weekly + slot.hours > ta->max_hours_per_week
                || semester + slot.hours > ta->max_hours_per_semester)
                continue;
            weekly += slot.hours;
            semester += slot.hours;
            current_.push_back({slot.occurrence->id, ta_id});
            choose(slot_index, i + 1, remaining - 1);
            current_.pop_back();
            weekly -= slot.hours;
            semester -= slot.hours;
        }
    }

    detail::InstanceIndex index_;
    WeightConfig weights_;
    const std::atomic<bool>* cancel_;
    std::vector<Slot> slots_;
    bool infeasible_by_construction_ = false;

    std::vector<Assignment> current_;
    std::map<std::pair<std::string, int>, int> weekly_hours_;
    std::map<std::string, int> semester_hours_;

    std::function<bool(const Solution&)> better_;
    Solution best_;
    bool found_ = false;
};

} // namespace

std::optional<OracleOptimum> brute_force_optimum(const Instance& instance,
    const WeightConfig& weights, const std::atomic<bool>* cancel) {
    Enumerator enumerator(instance, weights, cancel);
    std::int64_t best_objective = 0;
    bool any = false;
    const bool found = enumerator.enumerate([&](const Solution& candidate) {
        const auto objective = approval_objective(instance, candidate, weights);
        if (!any || objective > best_objective) {
            any = true;
            best_objective = objective;
            return true;
        }
        return false;
    });
    if (!found) return std::nullopt;
    return OracleOptimum{enumerator.best(), best_objective};
}

std::optional<OracleMinPerturbation> brute_force_min_perturbation(const Instance& instance_prime,
    const Solution& original_solution, const WeightConfig& weights,
    const std::atomic<bool>* cancel) {
    Solution original = original_solution;
    canonicalize(original);

    Enumerator enumerator(instance_prime, weights, cancel);
    int best_kept = -1;
    std::int64_t best_objective = 0;
    const bool found = enumerator.enumerate([&](const Solution& candidate) {
        const int kept = shared_assignment_count(original, candidate);
        const auto objective = approval_objective(instance_prime, candidate, weights);
        if (kept > best_kept || (kept == best_kept && objective > best_objective)) {
            best_kept = kept;
            best_objective = objective;
            return true;
        }
        return false;
    });
    if (!found) return std::nullopt;
    return OracleMinPerturbation{enumerator.best(), best_kept, best_objective};
}

} // namespace replan
