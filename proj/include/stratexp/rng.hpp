#pragma once

#include <cmath>
#include <cstdint>

namespace stratexp {

// Random streams for the simulator, pinned here so that results are
// bit-reproducible across platforms, runs, and thread counts:
//
//   * splitmix64 (Steele/Lea/Flood's SplittableRandom finalizer, Vigna's
//     public-domain reference) supplies 64-bit outputs;
//   * each (seed, path, driver) triple gets its own stream whose initial
//     state is derived with the same finalizer, so path results never depend
//     on execution order;
//   * standard normals come from the Box-Muller transform on 53-bit
//     uniforms, two per pair of draws.
//
// std::normal_distribution is deliberately not used: its algorithm is
// implementation-defined, which would tie results to the standard library.

/// splitmix64 finalizer; bijective on 64-bit values.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Initial splitmix64 state for the stream of one (path, driver) pair under
/// a run seed.
constexpr std::uint64_t stream_state(std::uint64_t seed, std::uint64_t path,
                                     std::uint64_t driver) {
    std::uint64_t s = mix64(seed ^ 0x6A09E667F3BCC909ULL);
    s = mix64(s ^ (path * 0x9E3779B97F4A7C15ULL));
    s = mix64(s ^ (driver * 0xD1B54A32D192ED03ULL));
    return s;
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Stream of independent N(0, 1) variates via Box-Muller.
class GaussianStream {
public:
    explicit GaussianStream(std::uint64_t state) : rng_(state) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1] keeps the log finite.
        double u1 = static_cast<double>((rng_.next() >> 11) + 1) * 0x1.0p-53;
        double u2 = rng_.next_unit();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.141592653589793238462643383279502884 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    SplitMix64 rng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace stratexp
