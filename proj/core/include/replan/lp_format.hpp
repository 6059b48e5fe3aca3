#pragma once

#include <string>

#include "replan/ilp.hpp"

namespace replan {

/// Serialises the problem in CPLEX LP text format (sections Maximize,
/// Subject To, Binary, End) so it can be handed to an external solver.
/// Variable names are the debug labels sanitised to [A-Za-z0-9_]; the output
/// is byte-identical across runs for equal input.
std::string export_lp(const IlpProblem& problem);

} // namespace replan
