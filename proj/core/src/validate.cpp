#include "replan/validate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "instance_index.hpp"
#include "replan/errors.hpp"

namespace replan {

std::string to_string(IneligibleReason reason) {
    return reason == IneligibleReason::Red ? "red" : "unavailable";
}

std::string describe(const Violation& violation) {
    std::ostringstream out;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Understaffed>) {
                out << "understaffed occurrence=" << v.occurrence_id << " have=" << v.have
                    << " need=" << v.need;
            } else if constexpr (std::is_same_v<T, Overstaffed>) {
                out << "overstaffed occurrence=" << v.occurrence_id << " have=" << v.have
                    << " need=" << v.need;
            } else if constexpr (std::is_same_v<T, WeeklyHoursExceeded>) {
                out << "weekly-hours-exceeded ta=" << v.ta_id << " week=" << v.week
                    << " used=" << v.used << " cap=" << v.cap;
            } else if constexpr (std::is_same_v<T, SemesterHoursExceeded>) {
                out << "semester-hours-exceeded ta=" << v.ta_id << " used=" << v.used
                    << " cap=" << v.cap;
            } else if constexpr (std::is_same_v<T, IneligibleAssignment>) {
                out << "ineligible-assignment occurrence=" << v.occurrence_id << " ta=" << v.ta_id
                    << " reason=" << to_string(v.reason);
            } else if constexpr (std::is_same_v<T, LockViolated>) {
                out << "lock-violated occurrence=" << v.occurrence_id << " ta=" << v.ta_id;
            }
        },
        violation);
    return out.str();
}

std::vector<std::string> eligible_tas(const Instance& instance, const std::string& occurrence_id) {
    detail::InstanceIndex index(instance);
    const auto* occurrence = index.occurrence(occurrence_id);
    if (!occurrence) throw UnknownIdError("occurrence", occurrence_id);

    std::vector<std::string> result;
    for (const auto& ta : instance.tas) {
        if (index.is_eligible(ta.id, *occurrence)) result.push_back(ta.id);
    }
    std::sort(result.begin(), result.end());
    return result;
}

int hours_assigned(const Instance& instance, const Solution& input, const std::string& ta_id,
    std::optional<int> week) {
    detail::InstanceIndex index(instance);
    if (!index.ta(ta_id)) throw UnknownIdError("ta", ta_id);

    Solution solution = input;
    canonicalize(solution);
    int hours = 0;
    for (const auto& assignment : solution.assignments) {
        if (assignment.ta_id != ta_id) continue;
        const auto* occurrence = index.occurrence(assignment.occurrence_id);
        if (!occurrence)
            throw DanglingReferenceError(
                "solution references unknown occurrence '" + assignment.occurrence_id + "'");
        if (week && occurrence->week != *week) continue;
        hours += index.hours_of(*occurrence);
    }
    return hours;
}

std::vector<Violation> validate_solution(const Instance& instance, const Solution& input) {
    detail::InstanceIndex index(instance);

    Solution solution = input;
    canonicalize(solution); // pairs are a set; tolerate unsorted input

    for (const auto& assignment : solution.assignments) {
        if (!index.occurrence(assignment.occurrence_id))
            throw DanglingReferenceError(
                "solution references unknown occurrence '" + assignment.occurrence_id + "'");
        if (!index.ta(assignment.ta_id))
            throw DanglingReferenceError(
                "solution references unknown ta '" + assignment.ta_id + "'");
    }

    std::vector<Violation> violations;

    std::map<std::string, int> staffed;
    for (const auto& assignment : solution.assignments) ++staffed[assignment.occurrence_id];
    for (const auto& occurrence : instance.occurrences) {
        const int need = index.session_of(occurrence).num_tas_per_session;
        const int have = staffed.count(occurrence.id) ? staffed.at(occurrence.id) : 0;
        if (have < need) violations.push_back(Understaffed{occurrence.id, have, need});
        if (have > need) violations.push_back(Overstaffed{occurrence.id, have, need});
    }

    std::map<std::pair<std::string, int>, int> weekly_hours;
    std::map<std::string, int> semester_hours;
    for (const auto& assignment : solution.assignments) {
        const auto& occurrence = *index.occurrence(assignment.occurrence_id);
        const int hours = index.hours_of(occurrence);
        weekly_hours[{assignment.ta_id, occurrence.week}] += hours;
        semester_hours[assignment.ta_id] += hours;

        if (index.is_unavailable(assignment.ta_id, occurrence.id)) {
            violations.push_back(IneligibleAssignment{
                occurrence.id, assignment.ta_id, IneligibleReason::Unavailable});
        } else if (index.rating(assignment.ta_id, index.session_of(occurrence).module_id)
            == ApprovalRating::Red) {
            violations.push_back(
                IneligibleAssignment{occurrence.id, assignment.ta_id, IneligibleReason::Red});
        }
    }

    for (const auto& [key, used] : weekly_hours) {
        const auto& [ta_id, week] = key;
        const int cap = index.ta(ta_id)->max_hours_per_week;
        if (used > cap) violations.push_back(WeeklyHoursExceeded{ta_id, week, used, cap});
    }
    for (const auto& [ta_id, used] : semester_hours) {
        const int cap = index.ta(ta_id)->max_hours_per_semester;
        if (used > cap) violations.push_back(SemesterHoursExceeded{ta_id, used, cap});
    }

    for (const auto& lock : instance.locks) {
        if (!solution.contains(Assignment{lock.occurrence_id, lock.ta_id}))
            violations.push_back(LockViolated{lock.occurrence_id, lock.ta_id});
    }

    std::sort(violations.begin(), violations.end());
    return violations;
}

} // namespace replan
