#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "replan/model.hpp"
#include "replan/validate.hpp"

namespace replan {

struct BlockOccurrence {
    std::string ta_id;
    std::string occurrence_id;

    auto operator<=>(const BlockOccurrence&) const = default;
};

struct BlockWeek {
    std::string ta_id;
    int week = 0;

    auto operator<=>(const BlockWeek&) const = default;
};

struct BlockSession {
    std::string ta_id;
    std::string session_id;
    std::vector<int> weeks;

    auto operator<=>(const BlockSession&) const = default;
};

struct SetMaxWeekHours {
    std::string ta_id;
    int hours = 0;

    auto operator<=>(const SetMaxWeekHours&) const = default;
};

struct SetMaxSemesterHours {
    std::string ta_id;
    int hours = 0;

    auto operator<=>(const SetMaxSemesterHours&) const = default;
};

struct LockAssignment {
    std::string occurrence_id;
    std::string ta_id;

    auto operator<=>(const LockAssignment&) const = default;
};

struct LockBeforeWeek {
    int week = 0;

    auto operator<=>(const LockBeforeWeek&) const = default;
};

using Change = std::variant<BlockOccurrence, BlockWeek, BlockSession, SetMaxWeekHours,
    SetMaxSemesterHours, LockAssignment, LockBeforeWeek>;

struct ChangeSet {
    std::vector<Change> changes;

    bool operator==(const ChangeSet&) const = default;

    bool empty() const { return changes.empty(); }
    std::size_t size() const { return changes.size(); }
};

/// Parses the line-oriented change command format:
///
///   block <taId> occurrence <occId>
///   block <taId> week <int>
///   block <taId> session <sessionId> weeks <int>[,<int>]*
///   set-max-week-hours <taId> <int>
///   set-max-semester-hours <taId> <int>
///   lock <occId> <taId>
///   lock-before-week <int>
///
/// Blank lines and '#' comments are ignored. Throws SyntaxError with the
/// offending line number.
ChangeSet parse_changes(const std::string& text);

/// Inverse of parse_changes, one command per line.
std::string print_changes(const ChangeSet& changes);

/// Applies the commands to a copy of the instance. Block commands expand to
/// per-occurrence unavailability edges (a blocked week/session blocks every
/// occurrence in it), cap commands overwrite the TA's limits, lock commands
/// pin pairs, and lock-before-week pins every pair of the original solution
/// that lies in an earlier week. Throws UnknownIdError.
Instance apply_changes(const Instance& instance, const ChangeSet& changes,
    const Solution& original_solution);

struct Vacuous {};

struct LocalViolations {
    std::vector<std::string> occurrence_ids; // sorted, unique
};

struct ScopeExcess {
    std::optional<int> week; // nullopt = semester
    int excess = 0;
};

struct TaOverload {
    std::string ta_id;
    std::vector<ScopeExcess> excesses;
};

struct Complex {};

using ImpactClass = std::variant<Vacuous, LocalViolations, TaOverload, Complex>;

std::string to_string(const ImpactClass& classification);

/// Effect of an already-applied change on a previously computed solution.
struct ChangeImpact {
    ImpactClass classification;
    std::vector<Violation> violations;

    bool is_vacuous() const { return std::holds_alternative<Vacuous>(classification); }
    bool is_local() const { return std::holds_alternative<LocalViolations>(classification); }
    bool is_overload() const { return std::holds_alternative<TaOverload>(classification); }
    bool is_complex() const { return std::holds_alternative<Complex>(classification); }
};

/// Classifies the violations of the original solution against the changed
/// instance:
///   - Vacuous: no violations;
///   - LocalViolations: only ineligible-pair / understaffing violations, all
///     concerning at most one TA (repairable slot by slot);
///   - TaOverload: only hour-cap violations of a single TA;
///   - Complex: everything else (mixed kinds or several problematic TAs).
ChangeImpact classify_change(const Instance& instance_prime, const Solution& original_solution);

} // namespace replan
