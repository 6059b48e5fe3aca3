#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace replan {

/// Deterministic random source. Wraps mt19937_64 with hand-rolled integer
/// draws because the standard distributions are implementation-defined and
/// generated fixtures must be byte-identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform-ish integer in [lo, hi], inclusive. Modulo draw; the bias is
    /// irrelevant at these range sizes.
    int next_int(int lo, int hi) {
        if (hi <= lo) return lo;
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<int>(next_u64() % span);
    }

    /// True with probability numerator/denominator.
    bool chance(int numerator, int denominator) {
        return next_int(0, denominator - 1) < numerator;
    }

    template <typename T>
    const T& pick(const std::vector<T>& items) {
        return items[static_cast<std::size_t>(next_int(0, static_cast<int>(items.size()) - 1))];
    }

    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(next_int(0, static_cast<int>(i) - 1));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Derives an independent stream from a seed and a stream tag.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 over seed ^ golden-ratio-scaled stream
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace replan
