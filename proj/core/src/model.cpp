#include "replan/model.hpp"

#include <algorithm>
#include <set>

#include "replan/errors.hpp"

namespace replan {

std::string to_string(ApprovalRating rating) {
    switch (rating) {
    case ApprovalRating::Green: return "GREEN";
    case ApprovalRating::Amber: return "AMBER";
    case ApprovalRating::Red: return "RED";
    }
    return "RED";
}

ApprovalRating approval_rating_from_string(const std::string& text) {
    if (text == "GREEN") return ApprovalRating::Green;
    if (text == "AMBER") return ApprovalRating::Amber;
    if (text == "RED") return ApprovalRating::Red;
    throw Error("not an approval rating: '" + text + "'");
}

namespace {

template <typename T>
const T* find_by_id(const std::vector<T>& items, const std::string& id) {
    for (const auto& item : items) {
        if (item.id == id) return &item;
    }
    return nullptr;
}

} // namespace

const CourseModule* Instance::find_module(const std::string& id) const {
    return find_by_id(modules, id);
}

const TeachingSession* Instance::find_session(const std::string& id) const {
    return find_by_id(sessions, id);
}

const SessionOccurrence* Instance::find_occurrence(const std::string& id) const {
    return find_by_id(occurrences, id);
}

const TeachingAssistant* Instance::find_ta(const std::string& id) const {
    return find_by_id(tas, id);
}

ApprovalRating Instance::rating_of(const std::string& ta_id, const std::string& module_id) const {
    for (const auto& approval : approvals) {
        if (approval.ta_id == ta_id && approval.module_id == module_id) return approval.rating;
    }
    return ApprovalRating::Red;
}

bool Instance::is_unavailable(const std::string& ta_id, const std::string& occurrence_id) const {
    for (const auto& entry : unavailabilities) {
        if (entry.ta_id == ta_id && entry.occurrence_id == occurrence_id) return true;
    }
    return false;
}

bool Solution::contains(const Assignment& assignment) const {
    return std::binary_search(assignments.begin(), assignments.end(), assignment);
}

void canonicalize(Instance& instance) {
    auto by_id = [](const auto& a, const auto& b) { return a.id < b.id; };
    std::sort(instance.modules.begin(), instance.modules.end(), by_id);
    std::sort(instance.sessions.begin(), instance.sessions.end(), by_id);
    std::sort(instance.occurrences.begin(), instance.occurrences.end(), by_id);
    std::sort(instance.tas.begin(), instance.tas.end(), by_id);
    std::sort(instance.approvals.begin(), instance.approvals.end());
    std::sort(instance.unavailabilities.begin(), instance.unavailabilities.end());
    instance.unavailabilities.erase(
        std::unique(instance.unavailabilities.begin(), instance.unavailabilities.end()),
        instance.unavailabilities.end());
    std::sort(instance.locks.begin(), instance.locks.end());
    instance.locks.erase(std::unique(instance.locks.begin(), instance.locks.end()),
        instance.locks.end());
    for (auto& session : instance.sessions) {
        std::sort(session.weeks.begin(), session.weeks.end());
        session.weeks.erase(std::unique(session.weeks.begin(), session.weeks.end()),
            session.weeks.end());
    }
}

void canonicalize(Solution& solution) {
    std::sort(solution.assignments.begin(), solution.assignments.end());
    solution.assignments.erase(std::unique(solution.assignments.begin(), solution.assignments.end()),
        solution.assignments.end());
}

void check_instance(const Instance& instance) {
    auto require_unique_ids = [](const auto& items, const char* kind) {
        std::set<std::string> seen;
        for (const auto& item : items) {
            if (!seen.insert(item.id).second)
                throw IntegrityError(std::string("duplicate ") + kind + " id '" + item.id + "'");
        }
    };
    require_unique_ids(instance.modules, "module");
    require_unique_ids(instance.sessions, "session");
    require_unique_ids(instance.occurrences, "occurrence");
    require_unique_ids(instance.tas, "ta");

    for (const auto& ta : instance.tas) {
        if (ta.max_hours_per_week < 0 || ta.max_hours_per_semester < 0)
            throw IntegrityError("negative hour cap for ta '" + ta.id + "'");
    }

    for (const auto& session : instance.sessions) {
        if (!instance.find_module(session.module_id))
            throw IntegrityError(
                "session '" + session.id + "' references unknown module '" + session.module_id + "'");
        if (session.num_tas_per_session < 1)
            throw IntegrityError("session '" + session.id + "' needs a positive TA count");
        if (session.hours_per_occurrence <= 0)
            throw IntegrityError("session '" + session.id + "' needs positive hours");
        if (session.weeks.empty())
            throw IntegrityError("session '" + session.id + "' has no weeks");
        for (const int week : session.weeks)
            if (week < 1)
                throw IntegrityError(
                    "session '" + session.id + "' uses a week index below 1");
    }

    // Exactly one occurrence per (session, week in session.weeks).
    std::set<std::pair<std::string, int>> occurrence_slots;
    for (const auto& occurrence : instance.occurrences) {
        const auto* session = instance.find_session(occurrence.session_id);
        if (!session)
            throw IntegrityError("occurrence '" + occurrence.id + "' references unknown session '"
                + occurrence.session_id + "'");
        if (!std::binary_search(session->weeks.begin(), session->weeks.end(), occurrence.week))
            throw IntegrityError("occurrence '" + occurrence.id + "' lies in week "
                + std::to_string(occurrence.week) + " which session '" + session->id
                + "' does not run in");
        if (!occurrence_slots.insert({occurrence.session_id, occurrence.week}).second)
            throw IntegrityError("duplicate occurrence for session '" + occurrence.session_id
                + "' week " + std::to_string(occurrence.week));
    }
    for (const auto& session : instance.sessions) {
        for (int week : session.weeks) {
            if (!occurrence_slots.count({session.id, week}))
                throw IntegrityError("session '" + session.id + "' week " + std::to_string(week)
                    + " has no occurrence");
        }
    }

    std::set<std::pair<std::string, std::string>> approval_keys;
    for (const auto& approval : instance.approvals) {
        if (!instance.find_ta(approval.ta_id))
            throw IntegrityError("approval references unknown ta '" + approval.ta_id + "'");
        if (!instance.find_module(approval.module_id))
            throw IntegrityError("approval references unknown module '" + approval.module_id + "'");
        if (!approval_keys.insert({approval.ta_id, approval.module_id}).second)
            throw IntegrityError("duplicate approval for ta '" + approval.ta_id + "', module '"
                + approval.module_id + "'");
    }

    for (const auto& entry : instance.unavailabilities) {
        if (!instance.find_ta(entry.ta_id))
            throw IntegrityError("unavailability references unknown ta '" + entry.ta_id + "'");
        if (!instance.find_occurrence(entry.occurrence_id))
            throw IntegrityError(
                "unavailability references unknown occurrence '" + entry.occurrence_id + "'");
    }

    for (const auto& lock : instance.locks) {
        if (!instance.find_ta(lock.ta_id))
            throw IntegrityError("lock references unknown ta '" + lock.ta_id + "'");
        if (!instance.find_occurrence(lock.occurrence_id))
            throw IntegrityError("lock references unknown occurrence '" + lock.occurrence_id + "'");
    }
}

int shared_assignment_count(const Solution& a, const Solution& b) {
    // both sorted
    int count = 0;
    auto ia = a.assignments.begin();
    auto ib = b.assignments.begin();
    while (ia != a.assignments.end() && ib != b.assignments.end()) {
        if (*ia < *ib) {
            ++ia;
        } else if (*ib < *ia) {
            ++ib;
        } else {
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
}

} // namespace replan
