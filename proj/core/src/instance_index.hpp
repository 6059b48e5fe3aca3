#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>

#include "replan/model.hpp"

namespace replan::detail {

// Lookup tables over an Instance. Used internally for anything that walks
// solutions; never exposed, so the unordered containers cannot leak
// nondeterministic iteration order into results.
class InstanceIndex {
public:
    explicit InstanceIndex(const Instance& instance) : instance_(instance) {
        for (const auto& session : instance.sessions) sessions_.emplace(session.id, &session);
        for (const auto& occurrence : instance.occurrences)
            occurrences_.emplace(occurrence.id, &occurrence);
        for (const auto& ta : instance.tas) tas_.emplace(ta.id, &ta);
        for (const auto& approval : instance.approvals)
            ratings_.emplace(key(approval.ta_id, approval.module_id), approval.rating);
        for (const auto& entry : instance.unavailabilities)
            unavailable_.insert(key(entry.ta_id, entry.occurrence_id));
    }

    const Instance& instance() const { return instance_; }

    const SessionOccurrence* occurrence(const std::string& id) const {
        auto it = occurrences_.find(id);
        return it == occurrences_.end() ? nullptr : it->second;
    }

    const TeachingAssistant* ta(const std::string& id) const {
        auto it = tas_.find(id);
        return it == tas_.end() ? nullptr : it->second;
    }

    const TeachingSession* session(const std::string& id) const {
        auto it = sessions_.find(id);
        return it == sessions_.end() ? nullptr : it->second;
    }

    const TeachingSession& session_of(const SessionOccurrence& occurrence) const {
        return *sessions_.at(occurrence.session_id);
    }

    ApprovalRating rating(const std::string& ta_id, const std::string& module_id) const {
        auto it = ratings_.find(key(ta_id, module_id));
        return it == ratings_.end() ? ApprovalRating::Red : it->second;
    }

    bool is_unavailable(const std::string& ta_id, const std::string& occurrence_id) const {
        return unavailable_.count(key(ta_id, occurrence_id)) > 0;
    }

    // Eligibility mirrors the assignment rule: approval at least Amber for
    // the occurrence's module and no unavailability edge.
    bool is_eligible(const std::string& ta_id, const SessionOccurrence& occurrence) const {
        if (is_unavailable(ta_id, occurrence.id)) return false;
        return rating(ta_id, session_of(occurrence).module_id) != ApprovalRating::Red;
    }

    int hours_of(const SessionOccurrence& occurrence) const {
        return session_of(occurrence).hours_per_occurrence;
    }

private:
    static std::string key(const std::string& a, const std::string& b) { return a + '\x1f' + b; }

    const Instance& instance_;
    std::unordered_map<std::string, const TeachingSession*> sessions_;
    std::unordered_map<std::string, const SessionOccurrence*> occurrences_;
    std::unordered_map<std::string, const TeachingAssistant*> tas_;
    std::unordered_map<std::string, ApprovalRating> ratings_;
    std::unordered_set<std::string> unavailable_;
};

} // namespace replan::detail
