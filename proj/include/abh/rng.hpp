#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace abh {

/// Deterministic random stream keyed by (seed, stream index).
///
/// Built only on std::mt19937_64 and std::seed_seq, whose outputs are fully
/// specified by the standard, so sequences are identical across platforms and
/// independent of how streams are scheduled across threads.
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream, std::uint32_t tag = 0) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32), tag};
        engine_.seed(seq);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal (Box-Muller).
    double normal() {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    /// Integer in [lo, hi].
    int integer(int lo, int hi) { return lo + static_cast<int>(uniform() * (hi - lo + 1)); }

private:
    std::mt19937_64 engine_;
};

}  // namespace abh
