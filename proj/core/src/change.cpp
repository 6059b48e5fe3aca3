#include "replan/change.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "instance_index.hpp"
#include "replan/errors.hpp"
#include "text_util.hpp"

namespace replan {

namespace {

using detail::parse_int;
using detail::split_on;
using detail::split_ws;

int require_int(const std::string& token, int line, const std::string& what) {
    const auto value = parse_int(token);
    if (!value) throw SyntaxError(line, "expected " + what + ", got '" + token + "'");
    return *value;
}

int require_nonnegative(const std::string& token, int line, const std::string& what) {
    const int value = require_int(token, line, what);
    if (value < 0) throw SyntaxError(line, what + " must be non-negative");
    return value;
}

Change parse_block(const std::vector<std::string>& tokens, int line) {
    if (tokens.size() < 4) throw SyntaxError(line, "incomplete block command");
    const auto& ta_id = tokens[1];
    const auto& what = tokens[2];
    if (what == "occurrence") {
        if (tokens.size() != 4) throw SyntaxError(line, "block occurrence takes one id");
        return BlockOccurrence{ta_id, tokens[3]};
    }
    if (what == "week") {
        if (tokens.size() != 4) throw SyntaxError(line, "block week takes one week index");
        return BlockWeek{ta_id, require_int(tokens[3], line, "week index")};
    }
    if (what == "session") {
        if (tokens.size() != 6 || tokens[4] != "weeks")
            throw SyntaxError(line, "expected: block <taId> session <sessionId> weeks <list>");
        std::vector<int> weeks;
        for (const auto& part : split_on(tokens[5], ','))
            weeks.push_back(require_int(part, line, "week index"));
        std::sort(weeks.begin(), weeks.end());
        weeks.erase(std::unique(weeks.begin(), weeks.end()), weeks.end());
        if (weeks.empty()) throw SyntaxError(line, "empty week list");
        return BlockSession{ta_id, tokens[3], std::move(weeks)};
    }
    throw SyntaxError(line, "unknown block target '" + what + "'");
}

} // namespace

ChangeSet parse_changes(const std::string& text) {
    ChangeSet set;
    int line_no = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;

        const auto& command = tokens[0];
        if (command == "block") {
            set.changes.push_back(parse_block(tokens, line_no));
        } else if (command == "set-max-week-hours") {
            if (tokens.size() != 3)
                throw SyntaxError(line_no, "expected: set-max-week-hours <taId> <hours>");
            set.changes.push_back(
                SetMaxWeekHours{tokens[1], require_nonnegative(tokens[2], line_no, "hours")});
        } else if (command == "set-max-semester-hours") {
            if (tokens.size() != 3)
                throw SyntaxError(line_no, "expected: set-max-semester-hours <taId> <hours>");
            set.changes.push_back(
                SetMaxSemesterHours{tokens[1], require_nonnegative(tokens[2], line_no, "hours")});
        } else if (command == "lock") {
            if (tokens.size() != 3) throw SyntaxError(line_no, "expected: lock <occId> <taId>");
            set.changes.push_back(LockAssignment{tokens[1], tokens[2]});
        } else if (command == "lock-before-week") {
            if (tokens.size() != 2)
                throw SyntaxError(line_no, "expected: lock-before-week <week>");
            set.changes.push_back(LockBeforeWeek{require_int(tokens[1], line_no, "week index")});
        } else {
            throw SyntaxError(line_no, "unknown command '" + command + "'");
        }
    }
    return set;
}

std::string print_changes(const ChangeSet& changes) {
    std::ostringstream out;
    for (const auto& change : changes.changes) {
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, BlockOccurrence>) {
                    out << "block " << c.ta_id << " occurrence " << c.occurrence_id;
                } else if constexpr (std::is_same_v<T, BlockWeek>) {
                    out << "block " << c.ta_id << " week " << c.week;
                } else if constexpr (std::is_same_v<T, BlockSession>) {
                    out << "block " << c.ta_id << " session " << c.session_id << " weeks ";
                    for (std::size_t i = 0; i < c.weeks.size(); ++i)
                        out << (i ? "," : "") << c.weeks[i];
                } else if constexpr (std::is_same_v<T, SetMaxWeekHours>) {
                    out << "set-max-week-hours " << c.ta_id << " " << c.hours;
                } else if constexpr (std::is_same_v<T, SetMaxSemesterHours>) {
                    out << "set-max-semester-hours " << c.ta_id << " " << c.hours;
                } else if constexpr (std::is_same_v<T, LockAssignment>) {
                    out << "lock " << c.occurrence_id << " " << c.ta_id;
                } else if constexpr (std::is_same_v<T, LockBeforeWeek>) {
                    out << "lock-before-week " << c.week;
                }
            },
            change);
        out << "\n";
    }
    return out.str();
}

namespace {

TeachingAssistant& resolve_ta(Instance& instance, const std::string& ta_id) {
    for (auto& ta : instance.tas)
        if (ta.id == ta_id) return ta;
    throw UnknownIdError("ta", ta_id);
}

void block_pair(Instance& instance, const std::string& ta_id, const std::string& occurrence_id) {
    instance.unavailabilities.push_back({ta_id, occurrence_id});
}

} // namespace

Instance apply_changes(const Instance& instance, const ChangeSet& changes,
    const Solution& original_solution) {
    Instance result = instance;
    detail::InstanceIndex index(instance);

    for (const auto& change : changes.changes) {
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, BlockOccurrence>) {
                    if (!index.ta(c.ta_id)) throw UnknownIdError("ta", c.ta_id);
                    if (!index.occurrence(c.occurrence_id))
                        throw UnknownIdError("occurrence", c.occurrence_id);
                    block_pair(result, c.ta_id, c.occurrence_id);
                } else if constexpr (std::is_same_v<T, BlockWeek>) {
                    if (!index.ta(c.ta_id)) throw UnknownIdError("ta", c.ta_id);
                    for (const auto& occurrence : instance.occurrences)
                        if (occurrence.week == c.week) block_pair(result, c.ta_id, occurrence.id);
                } else if constexpr (std::is_same_v<T, BlockSession>) {
                    if (!index.ta(c.ta_id)) throw UnknownIdError("ta", c.ta_id);
                    if (!index.session(c.session_id)) throw UnknownIdError("session", c.session_id);
                    for (const auto& occurrence : instance.occurrences) {
                        if (occurrence.session_id != c.session_id) continue;
                        if (std::binary_search(c.weeks.begin(), c.weeks.end(), occurrence.week))
                            block_pair(result, c.ta_id, occurrence.id);
                    }
                } else if constexpr (std::is_same_v<T, SetMaxWeekHours>) {
                    resolve_ta(result, c.ta_id).max_hours_per_week = c.hours;
                } else if constexpr (std::is_same_v<T, SetMaxSemesterHours>) {
                    resolve_ta(result, c.ta_id).max_hours_per_semester = c.hours;
                } else if constexpr (std::is_same_v<T, LockAssignment>) {
                    if (!index.ta(c.ta_id)) throw UnknownIdError("ta", c.ta_id);
                    if (!index.occurrence(c.occurrence_id))
                        throw UnknownIdError("occurrence", c.occurrence_id);
                    result.locks.push_back({c.occurrence_id, c.ta_id});
                } else if constexpr (std::is_same_v<T, LockBeforeWeek>) {
                    for (const auto& assignment : original_solution.assignments) {
                        const auto* occurrence = index.occurrence(assignment.occurrence_id);
                        if (!occurrence)
                            throw UnknownIdError("occurrence", assignment.occurrence_id);
                        if (occurrence->week < c.week)
                            result.locks.push_back({assignment.occurrence_id, assignment.ta_id});
                    }
                }
            },
            change);
    }

    canonicalize(result);
    return result;
}

std::string to_string(const ImpactClass& classification) {
    return std::visit(
        [](const auto& c) -> std::string {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, Vacuous>) {
                return "Vacuous";
            } else if constexpr (std::is_same_v<T, LocalViolations>) {
                std::string out = "LocalViolations";
                for (std::size_t i = 0; i < c.occurrence_ids.size(); ++i)
                    out += (i ? "," : " ") + c.occurrence_ids[i];
                return out;
            } else if constexpr (std::is_same_v<T, TaOverload>) {
                std::string out = "TaOverload " + c.ta_id;
                for (const auto& excess : c.excesses) {
                    out += excess.week ? " week=" + std::to_string(*excess.week) : " semester";
                    out += " excess=" + std::to_string(excess.excess);
                }
                return out;
            } else {
                return "Complex";
            }
        },
        classification);
}

ChangeImpact classify_change(const Instance& instance_prime, const Solution& original_solution) {
    ChangeImpact impact;
    impact.violations = validate_solution(instance_prime, original_solution);
    if (impact.violations.empty()) {
        impact.classification = Vacuous{};
        return impact;
    }

    bool only_local = true;    // ineligible pairs / understaffed slots
    bool only_overload = true; // weekly/semester cap breaches
    std::set<std::string> local_tas;
    std::set<std::string> overload_tas;
    std::set<std::string> occurrence_ids;
    TaOverload overload;

    for (const auto& violation : impact.violations) {
        if (const auto* v = std::get_if<IneligibleAssignment>(&violation)) {
            occurrence_ids.insert(v->occurrence_id);
            local_tas.insert(v->ta_id);
            only_overload = false;
        } else if (const auto* v = std::get_if<Understaffed>(&violation)) {
            occurrence_ids.insert(v->occurrence_id);
            only_overload = false;
        } else if (const auto* v = std::get_if<WeeklyHoursExceeded>(&violation)) {
            overload_tas.insert(v->ta_id);
            overload.excesses.push_back({v->week, v->used - v->cap});
            only_local = false;
        } else if (const auto* v = std::get_if<SemesterHoursExceeded>(&violation)) {
            overload_tas.insert(v->ta_id);
            overload.excesses.push_back({std::nullopt, v->used - v->cap});
            only_local = false;
        } else {
            only_local = false;
            only_overload = false;
        }
    }

    // A repair is local when a single TA's slots are affected. Blocks that
    // hit several TAs at once have no slot-by-slot fix and are routed to
    // full recomputation.
    if (only_local && local_tas.size() <= 1) {
        impact.classification =
            LocalViolations{{occurrence_ids.begin(), occurrence_ids.end()}};
    } else if (only_overload && overload_tas.size() == 1) {
        overload.ta_id = *overload_tas.begin();
        impact.classification = std::move(overload);
    } else {
        impact.classification = Complex{};
    }
    return impact;
}

} // namespace replan
