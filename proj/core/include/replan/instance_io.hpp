#pragma once

#include <string>

#include "replan/model.hpp"
#include "replan/reopt.hpp"

namespace replan {

/// Line-oriented instance format, one record per line:
///
///   module id=.. name=..
///   session id=.. module=.. need=.. hours=.. weeks=1,2,3
///   occurrence id=.. session=.. week=..
///   ta id=.. name=.. maxweek=.. maxsem=..
///   approval ta=.. module=.. rating=GREEN|AMBER|RED
///   unavailable ta=.. occurrence=..
///   lock occurrence=.. ta=..
///
/// '#' comments and blank lines are ignored. Writing is canonical: records
/// grouped by type in the order above and sorted, so value-equal instances
/// serialise byte-identically. Reading checks referential integrity
/// (IntegrityError) after parsing (ParseError).
Instance read_instance(const std::string& text);
std::string write_instance(const Instance& instance);

/// Solution files hold `assign occurrence=.. ta=..` lines, sorted.
Solution read_solution(const std::string& text);
std::string write_solution(const Solution& solution);

/// Edit script files hold `unassign ...` / `assign ...` lines in script
/// order: `unassign occurrence=.. ta=..`, then `assign occurrence=.. ta=..`.
EditScript read_script(const std::string& text);
std::string write_script(const EditScript& script);

} // namespace replan
