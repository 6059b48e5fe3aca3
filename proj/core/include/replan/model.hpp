#pragma once

#include <compare>
#include <string>
#include <vector>

namespace replan {

/// Suitability of a TA for a course module. Ordered: Green > Amber > Red.
enum class ApprovalRating { Red = 0, Amber = 1, Green = 2 };

std::string to_string(ApprovalRating rating);
ApprovalRating approval_rating_from_string(const std::string& text);

struct TeachingAssistant {
    std::string id;
    std::string name;
    int max_hours_per_week = 0;
    int max_hours_per_semester = 0;

    auto operator<=>(const TeachingAssistant&) const = default;
};

struct CourseModule {
    std::string id;
    std::string name;

    auto operator<=>(const CourseModule&) const = default;
};

/// A recurring teaching event of a module. Each listed week produces exactly
/// one SessionOccurrence.
struct TeachingSession {
    std::string id;
    std::string module_id;
    int num_tas_per_session = 1;
    int hours_per_occurrence = 1;
    std::vector<int> weeks; // sorted, unique, 1-based

    auto operator<=>(const TeachingSession&) const = default;
};

struct SessionOccurrence {
    std::string id;
    std::string session_id;
    int week = 1;

    auto operator<=>(const SessionOccurrence&) const = default;
};

struct Approval {
    std::string ta_id;
    std::string module_id;
    ApprovalRating rating = ApprovalRating::Red;

    auto operator<=>(const Approval&) const = default;
};

struct Unavailability {
    std::string ta_id;
    std::string occurrence_id;

    auto operator<=>(const Unavailability&) const = default;
};

/// A pinned assignment: any valid solution must contain exactly this pair.
struct Lock {
    std::string occurrence_id;
    std::string ta_id;

    auto operator<=>(const Lock&) const = default;
};

/// The full problem world. Collections are kept sorted by id so that
/// iteration order, serialisation and reports are deterministic.
struct Instance {
    std::vector<CourseModule> modules;
    std::vector<TeachingSession> sessions;
    std::vector<SessionOccurrence> occurrences;
    std::vector<TeachingAssistant> tas;
    std::vector<Approval> approvals;             // at most one per (ta, module); absent = Red
    std::vector<Unavailability> unavailabilities; // set semantics
    std::vector<Lock> locks;                      // set semantics

    bool operator==(const Instance&) const = default;

    const CourseModule* find_module(const std::string& id) const;
    const TeachingSession* find_session(const std::string& id) const;
    const SessionOccurrence* find_occurrence(const std::string& id) const;
    const TeachingAssistant* find_ta(const std::string& id) const;

    /// Approval rating of a TA for a module; Red when no approval is recorded.
    ApprovalRating rating_of(const std::string& ta_id, const std::string& module_id) const;
    bool is_unavailable(const std::string& ta_id, const std::string& occurrence_id) const;
};

struct Assignment {
    std::string occurrence_id;
    std::string ta_id;

    auto operator<=>(const Assignment&) const = default;
};

/// A set of (occurrence, TA) pairs, stored sorted and unique.
struct Solution {
    std::vector<Assignment> assignments;

    bool operator==(const Solution&) const = default;

    bool contains(const Assignment& assignment) const;
    std::size_t size() const { return assignments.size(); }
};

/// Sorts all collections and drops duplicate unavailability/lock records.
void canonicalize(Instance& instance);
void canonicalize(Solution& solution);

/// Verifies referential integrity and the per-(session, week) occurrence
/// invariant. Throws IntegrityError on the first problem found.
void check_instance(const Instance& instance);

/// Number of pairs present in both solutions.
int shared_assignment_count(const Solution& a, const Solution& b);

} // namespace replan
