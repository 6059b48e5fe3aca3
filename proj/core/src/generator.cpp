#include "replan/generator.hpp"

#include <string>
#include <vector>

#include "replan/encoder.hpp"
#include "replan/errors.hpp"
#include "replan/ilp.hpp"
#include "replan/rng.hpp"

namespace replan {

namespace {

const std::vector<std::string> kModuleNames = {"algorithms", "databases", "networks", "compilers",
    "statistics", "robotics", "security", "graphics", "logic", "systems", "optimisation",
    "geometry"};

const std::vector<std::string> kTaNames = {"alex", "bren", "caro", "dani", "eli", "fran", "gabi",
    "hana", "iris", "jona", "kim", "lena", "mika", "nora", "olli", "pia", "quin", "rene", "sam",
    "tess", "udo", "vera", "wim", "xena", "yuri", "zoe"};

std::string padded(int value, int width) {
    std::string digits = std::to_string(value);
    while (static_cast<int>(digits.size()) < width) digits.insert(digits.begin(), '0');
    return digits;
}

std::string pool_name(const std::vector<std::string>& pool, int i) {
    const int size = static_cast<int>(pool.size());
    std::string name = pool[static_cast<std::size_t>(i % size)];
    if (i >= size) name += "_" + std::to_string(i / size);
    return name;
}

void check_config(const GeneratorConfig& config) {
    if (config.num_modules < 1 || config.num_tas < 1 || config.weeks < 1)
        throw GenerationFailedError("module, TA and week counts must be positive");
    for (const auto* range : {&config.sessions_per_module, &config.num_tas_per_session,
             &config.hours_per_occurrence, &config.weeks_per_session, &config.max_week_hours,
             &config.max_semester_hours}) {
        if (!range->valid()) throw GenerationFailedError("empty range in generator config");
    }
    if (config.num_tas_per_session.lo < 1) throw GenerationFailedError("sessions need at least one TA");
    if (config.hours_per_occurrence.lo < 1) throw GenerationFailedError("hours must be positive");
    if (config.green_pct + config.amber_pct + config.red_pct != 100)
        throw GenerationFailedError("approval percentages must sum to 100");
}

Instance draw_instance(Rng& rng, const GeneratorConfig& config) {
    Instance instance;

    const int module_width = static_cast<int>(std::to_string(config.num_modules - 1).size());
    const int ta_width = static_cast<int>(std::to_string(config.num_tas - 1).size());
    const int week_width = static_cast<int>(std::to_string(config.weeks).size());

    for (int m = 0; m < config.num_modules; ++m)
        instance.modules.push_back({"mod" + padded(m, module_width), pool_name(kModuleNames, m)});

    for (int t = 0; t < config.num_tas; ++t) {
        TeachingAssistant ta;
        ta.id = "ta" + padded(t, ta_width);
        ta.name = pool_name(kTaNames, t);
        ta.max_hours_per_week = rng.next_int(config.max_week_hours.lo, config.max_week_hours.hi);
        ta.max_hours_per_semester =
            rng.next_int(config.max_semester_hours.lo, config.max_semester_hours.hi);
        instance.tas.push_back(std::move(ta));
    }

    std::vector<int> all_weeks(static_cast<std::size_t>(config.weeks));
    for (int w = 0; w < config.weeks; ++w) all_weeks[static_cast<std::size_t>(w)] = w + 1;

    int session_counter = 0;
    for (int m = 0; m < config.num_modules; ++m) {
        const int session_count =
            rng.next_int(config.sessions_per_module.lo, config.sessions_per_module.hi);
        for (int s = 0; s < session_count; ++s) {
            TeachingSession session;
            session.id = "s" + padded(session_counter++, 2);
            session.module_id = instance.modules[static_cast<std::size_t>(m)].id;
            session.num_tas_per_session =
                rng.next_int(config.num_tas_per_session.lo, config.num_tas_per_session.hi);
            session.hours_per_occurrence =
                rng.next_int(config.hours_per_occurrence.lo, config.hours_per_occurrence.hi);

            int week_count = rng.next_int(config.weeks_per_session.lo, config.weeks_per_session.hi);
            week_count = std::min(week_count, config.weeks);
            week_count = std::max(week_count, 1);
            std::vector<int> pool = all_weeks;
            rng.shuffle(pool);
            session.weeks.assign(pool.begin(), pool.begin() + week_count);
            std::sort(session.weeks.begin(), session.weeks.end());

            for (int week : session.weeks)
                instance.occurrences.push_back(
                    {session.id + "w" + padded(week, week_width), session.id, week});
            instance.sessions.push_back(std::move(session));
        }
    }

    for (const auto& ta : instance.tas) {
        for (const auto& module : instance.modules) {
            const int roll = rng.next_int(0, 99);
            if (roll < config.green_pct)
                instance.approvals.push_back({ta.id, module.id, ApprovalRating::Green});
            else if (roll < config.green_pct + config.amber_pct)
                instance.approvals.push_back({ta.id, module.id, ApprovalRating::Amber});
            // red stays implicit
        }
    }

    canonicalize(instance);
    return instance;
}

} // namespace

Instance generate_instance(const GeneratorConfig& config) {
    check_config(config);
    for (int attempt = 0; attempt < config.max_attempts; ++attempt) {
        Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(attempt)));
        Instance instance = draw_instance(rng, config);
        check_instance(instance);
        const auto encoded = encode_original(instance);
        // generous for desk scale; keeps hostile configs from stalling the
        // whole retry loop
        const auto solution = solve(encoded.problem, 5.0);
        if (solution.status == SolveStatus::Optimal) return instance;
    }
    throw GenerationFailedError("no solvable instance found for seed "
        + std::to_string(config.seed) + " within " + std::to_string(config.max_attempts)
        + " attempts");
}

} // namespace replan
