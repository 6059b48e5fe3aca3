#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "replan/model.hpp"

namespace replan {

enum class IneligibleReason { Red, Unavailable };

std::string to_string(IneligibleReason reason);

struct Understaffed {
    std::string occurrence_id;
    int have = 0;
    int need = 0;

    auto operator<=>(const Understaffed&) const = default;
};

struct Overstaffed {
    std::string occurrence_id;
    int have = 0;
    int need = 0;

    auto operator<=>(const Overstaffed&) const = default;
};

struct WeeklyHoursExceeded {
    std::string ta_id;
    int week = 0;
    int used = 0;
    int cap = 0;

    auto operator<=>(const WeeklyHoursExceeded&) const = default;
};

struct SemesterHoursExceeded {
    std::string ta_id;
    int used = 0;
    int cap = 0;

    auto operator<=>(const SemesterHoursExceeded&) const = default;
};

struct IneligibleAssignment {
    std::string occurrence_id;
    std::string ta_id;
    IneligibleReason reason = IneligibleReason::Red;

    auto operator<=>(const IneligibleAssignment&) const = default;
};

struct LockViolated {
    std::string occurrence_id;
    std::string ta_id;

    auto operator<=>(const LockViolated&) const = default;
};

/// One violated constraint instance. The variant order defines the report
/// order of validate_solution.
using Violation = std::variant<Understaffed, Overstaffed, WeeklyHoursExceeded,
    SemesterHoursExceeded, IneligibleAssignment, LockViolated>;

std::string describe(const Violation& violation);

/// TAs that may be assigned to the occurrence: approval Green or Amber for
/// the occurrence's module and no unavailability for the occurrence.
/// Returned sorted by id. Throws UnknownIdError for an unknown occurrence.
std::vector<std::string> eligible_tas(const Instance& instance, const std::string& occurrence_id);

/// Hours the TA works under the solution, either within one week or across
/// the whole semester (week == nullopt). Throws UnknownIdError.
int hours_assigned(const Instance& instance, const Solution& solution, const std::string& ta_id,
    std::optional<int> week = std::nullopt);

/// All constraint violations of the solution against the instance, sorted by
/// (kind, ids). Empty iff the solution is feasible. Throws
/// DanglingReferenceError when the solution names unknown ids.
std::vector<Violation> validate_solution(const Instance& instance, const Solution& solution);

} // namespace replan
