#pragma once

#include <cstdint>

#include "replan/model.hpp"

namespace replan {

struct IntRange {
    int lo = 1;
    int hi = 1;

    bool valid() const { return lo <= hi && lo >= 0; }
};

/// Knobs for the synthetic instance generator. Defaults target the desk
/// scale used throughout the test corpus: 7 modules, 20 TAs, 4 weeks.
struct GeneratorConfig {
    std::uint64_t seed = 0;
    int num_modules = 7;
    int num_tas = 20;
    int weeks = 4;
    IntRange sessions_per_module{1, 2};
    IntRange num_tas_per_session{1, 2};
    IntRange hours_per_occurrence{1, 2};
    IntRange weeks_per_session{1, 3};
    // approval distribution in percent; must sum to 100
    int green_pct = 35;
    int amber_pct = 35;
    int red_pct = 30;
    IntRange max_week_hours{4, 8};
    IntRange max_semester_hours{12, 24};
    int max_attempts = 64;
};

/// Deterministic synthetic instance, guaranteed solvable: candidate draws
/// are retried (still driven by the seed) until the assignment program has
/// an optimum. Throws GenerationFailedError when the attempt budget runs
/// out.
Instance generate_instance(const GeneratorConfig& config);

} // namespace replan
