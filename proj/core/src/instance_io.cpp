#include "replan/instance_io.hpp"

#include <map>
#include <sstream>

#include "replan/errors.hpp"
#include "text_util.hpp"

namespace replan {

namespace {

using detail::parse_int;
using detail::split_on;
using detail::split_ws;

class RecordFields {
public:
    RecordFields(const std::vector<std::string>& tokens, int line) : line_(line) {
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            const auto eq = tokens[i].find('=');
            if (eq == std::string::npos || eq == 0)
                throw ParseError(line, "expected key=value, got '" + tokens[i] + "'");
            const auto key = tokens[i].substr(0, eq);
            if (!fields_.emplace(key, tokens[i].substr(eq + 1)).second)
                throw ParseError(line, "duplicate field '" + key + "'");
        }
    }

    ~RecordFields() = default;

    std::string take(const std::string& key) {
        auto it = fields_.find(key);
        if (it == fields_.end()) throw ParseError(line_, "missing field '" + key + "'");
        std::string value = it->second;
        fields_.erase(it);
        return value;
    }

    int take_int(const std::string& key) {
        const auto text = take(key);
        const auto value = parse_int(text);
        if (!value) throw ParseError(line_, "field '" + key + "' is not an integer: '" + text + "'");
        return *value;
    }

    void expect_empty() const {
        if (!fields_.empty())
            throw ParseError(line_, "unexpected field '" + fields_.begin()->first + "'");
    }

private:
    int line_;
    std::map<std::string, std::string> fields_;
};

std::vector<int> parse_week_list(const std::string& text, int line) {
    std::vector<int> weeks;
    for (const auto& part : split_on(text, ',')) {
        const auto week = parse_int(part);
        if (!week) throw ParseError(line, "bad week list entry '" + part + "'");
        weeks.push_back(*week);
    }
    return weeks;
}

// Writers only emit text the readers can take back: one token per value,
// nothing that would be eaten as whitespace or a comment.
void require_token(const std::string& value, const char* what) {
    if (value.empty()) throw Error(std::string(what) + " must not be empty");
    for (const char c : value) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '#')
            throw Error(std::string(what) + " '" + value + "' cannot be written: "
                + "tokens must be whitespace- and '#'-free");
    }
}

template <typename Fn>
void for_each_record(const std::string& text, Fn&& handle) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        handle(tokens, line_no);
    }
}

} // namespace

Instance read_instance(const std::string& text) {
    Instance instance;
    for_each_record(text, [&](const std::vector<std::string>& tokens, int line) {
        const auto& record = tokens[0];
        RecordFields fields(tokens, line);
        if (record == "module") {
            instance.modules.push_back({fields.take("id"), fields.take("name")});
        } else if (record == "session") {
            TeachingSession session;
            session.id = fields.take("id");
            session.module_id = fields.take("module");
            session.num_tas_per_session = fields.take_int("need");
            session.hours_per_occurrence = fields.take_int("hours");
            session.weeks = parse_week_list(fields.take("weeks"), line);
            instance.sessions.push_back(std::move(session));
        } else if (record == "occurrence") {
            SessionOccurrence occurrence;
            occurrence.id = fields.take("id");
            occurrence.session_id = fields.take("session");
            occurrence.week = fields.take_int("week");
            instance.occurrences.push_back(std::move(occurrence));
        } else if (record == "ta") {
            TeachingAssistant ta;
            ta.id = fields.take("id");
            ta.name = fields.take("name");
            ta.max_hours_per_week = fields.take_int("maxweek");
            ta.max_hours_per_semester = fields.take_int("maxsem");
            instance.tas.push_back(std::move(ta));
        } else if (record == "approval") {
            Approval approval;
            approval.ta_id = fields.take("ta");
            approval.module_id = fields.take("module");
            const auto rating = fields.take("rating");
            try {
                approval.rating = approval_rating_from_string(rating);
            } catch (const Error&) {
                throw ParseError(line, "bad rating '" + rating + "'");
            }
            instance.approvals.push_back(std::move(approval));
        } else if (record == "unavailable") {
            instance.unavailabilities.push_back({fields.take("ta"), fields.take("occurrence")});
        } else if (record == "lock") {
            instance.locks.push_back({fields.take("occurrence"), fields.take("ta")});
        } else {
            throw ParseError(line, "unknown record type '" + record + "'");
        }
        fields.expect_empty();
    });

    canonicalize(instance);
    check_instance(instance);
    return instance;
}

std::string write_instance(const Instance& input) {
    Instance instance = input;
    canonicalize(instance);

    for (const auto& module : instance.modules) {
        require_token(module.id, "module id");
        require_token(module.name, "module name");
    }
    for (const auto& session : instance.sessions) require_token(session.id, "session id");
    for (const auto& occurrence : instance.occurrences)
        require_token(occurrence.id, "occurrence id");
    for (const auto& ta : instance.tas) {
        require_token(ta.id, "ta id");
        require_token(ta.name, "ta name");
    }

    std::ostringstream out;
    for (const auto& module : instance.modules)
        out << "module id=" << module.id << " name=" << module.name << "\n";
    for (const auto& session : instance.sessions) {
        out << "session id=" << session.id << " module=" << session.module_id
            << " need=" << session.num_tas_per_session << " hours=" << session.hours_per_occurrence
            << " weeks=";
        for (std::size_t i = 0; i < session.weeks.size(); ++i)
            out << (i ? "," : "") << session.weeks[i];
        out << "\n";
    }
    for (const auto& occurrence : instance.occurrences)
        out << "occurrence id=" << occurrence.id << " session=" << occurrence.session_id
            << " week=" << occurrence.week << "\n";
    for (const auto& ta : instance.tas)
        out << "ta id=" << ta.id << " name=" << ta.name << " maxweek=" << ta.max_hours_per_week
            << " maxsem=" << ta.max_hours_per_semester << "\n";
    for (const auto& approval : instance.approvals)
        out << "approval ta=" << approval.ta_id << " module=" << approval.module_id
            << " rating=" << to_string(approval.rating) << "\n";
    for (const auto& entry : instance.unavailabilities)
        out << "unavailable ta=" << entry.ta_id << " occurrence=" << entry.occurrence_id << "\n";
    for (const auto& lock : instance.locks)
        out << "lock occurrence=" << lock.occurrence_id << " ta=" << lock.ta_id << "\n";
    return out.str();
}

Solution read_solution(const std::string& text) {
    Solution solution;
    for_each_record(text, [&](const std::vector<std::string>& tokens, int line) {
        if (tokens[0] != "assign")
            throw ParseError(line, "unknown record type '" + tokens[0] + "'");
        RecordFields fields(tokens, line);
        Assignment assignment;
        assignment.occurrence_id = fields.take("occurrence");
        assignment.ta_id = fields.take("ta");
        fields.expect_empty();
        solution.assignments.push_back(std::move(assignment));
    });
    canonicalize(solution);
    return solution;
}

std::string write_solution(const Solution& input) {
    Solution solution = input;
    canonicalize(solution);
    std::ostringstream out;
    for (const auto& assignment : solution.assignments) {
        require_token(assignment.occurrence_id, "occurrence id");
        require_token(assignment.ta_id, "ta id");
        out << "assign occurrence=" << assignment.occurrence_id << " ta=" << assignment.ta_id
            << "\n";
    }
    return out.str();
}

EditScript read_script(const std::string& text) {
    EditScript script;
    for_each_record(text, [&](const std::vector<std::string>& tokens, int line) {
        EditOp op;
        if (tokens[0] == "unassign") {
            op.kind = EditOp::Kind::Unassign;
        } else if (tokens[0] == "assign") {
            op.kind = EditOp::Kind::Assign;
        } else {
            throw ParseError(line, "unknown record type '" + tokens[0] + "'");
        }
        RecordFields fields(tokens, line);
        op.occurrence_id = fields.take("occurrence");
        op.ta_id = fields.take("ta");
        fields.expect_empty();
        script.ops.push_back(std::move(op));
    });
    return script;
}

std::string write_script(const EditScript& script) {
    std::ostringstream out;
    for (const auto& op : script.ops) {
        require_token(op.occurrence_id, "occurrence id");
        require_token(op.ta_id, "ta id");
        out << (op.kind == EditOp::Kind::Unassign ? "unassign" : "assign")
            << " occurrence=" << op.occurrence_id << " ta=" << op.ta_id << "\n";
    }
    return out.str();
}

} // namespace replan
