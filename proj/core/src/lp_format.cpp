#include "replan/lp_format.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace replan {

namespace {

std::string sanitize(const std::string& label) {
    std::string out;
    out.reserve(label.size());
    for (char c : label) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9')
            || c == '_';
        out.push_back(ok ? c : '_');
    }
    return out;
}

std::vector<std::string> variable_names(const IlpProblem& problem) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(problem.var_count()));
    std::set<std::string> used;
    for (int v = 0; v < problem.var_count(); ++v) {
        std::string name = sanitize(problem.label(VarId{v}));
        if (name.empty() || std::isdigit(static_cast<unsigned char>(name.front())))
            name = "v" + std::to_string(v) + "_" + name;
        if (!used.insert(name).second) {
            name += "_" + std::to_string(v);
            used.insert(name);
        }
        names.push_back(std::move(name));
    }
    return names;
}

void append_terms(std::ostringstream& out, const std::vector<LinearTerm>& terms,
    const std::vector<std::string>& names) {
    bool first = true;
    for (const auto& term : terms) {
        const auto magnitude = term.coefficient < 0 ? -term.coefficient : term.coefficient;
        if (first) {
            if (term.coefficient < 0) out << "- ";
            first = false;
        } else {
            out << (term.coefficient < 0 ? " - " : " + ");
        }
        if (magnitude != 1) out << magnitude << " ";
        out << names[static_cast<std::size_t>(term.var.index)];
    }
}

} // namespace

std::string export_lp(const IlpProblem& problem) {
    problem.check();
    const auto names = variable_names(problem);

    std::ostringstream out;
    out << "Maximize\n";
    out << " obj:";
    if (problem.objective().terms.empty() && problem.objective().constant == 0) {
        out << " 0";
    } else {
        if (!problem.objective().terms.empty()) {
            out << " ";
            append_terms(out, problem.objective().terms, names);
        }
        if (problem.objective().constant != 0) {
            const auto constant = problem.objective().constant;
            if (problem.objective().terms.empty())
                out << " " << constant;
            else
                out << (constant < 0 ? " - " : " + ") << (constant < 0 ? -constant : constant);
        }
    }
    out << "\n";

    out << "Subject To\n";
    int unnamed = 0;
    for (const auto& constraint : problem.constraints()) {
        std::string name = sanitize(constraint.label);
        if (name.empty()) name = "c" + std::to_string(unnamed);
        ++unnamed;
        out << " " << name << ": ";
        if (constraint.terms.empty())
            out << "0";
        else
            append_terms(out, constraint.terms, names);
        out << " " << to_string(constraint.relation) << " " << constraint.rhs << "\n";
    }

    out << "Binary\n";
    for (const auto& name : names) out << " " << name << "\n";
    out << "End\n";
    return out.str();
}

} // namespace replan
