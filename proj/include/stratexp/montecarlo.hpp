#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "stratexp/rational.hpp"
#include "stratexp/word.hpp"

namespace stratexp {

struct SimConfig {
    Word word;
    double horizon = 1.0;      // t > 0
    std::uint32_t steps = 1;   // uniform grid, dt = horizon / steps
    std::uint32_t paths = 1;
    std::uint64_t seed = 0;
};

struct SimResult {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(paths)
    std::uint32_t paths = 0;
    std::optional<Rational> exact;  // closed-form value at the horizon
};

/// Wiener increments for one path, keyed by nonzero driver index; each
/// vector holds one N(0, dt) draw per grid step. Driver 0 is time and needs
/// no entry.
using DriverIncrements = std::map<Word::Letter, std::vector<double>>;

/// One path's Stratonovich iterated integral J_word(horizon) on a uniform
/// grid.
///
/// Maintains the values of all prefix integrals at the current grid point
/// (prefix of length 0 is the constant 1). Per step, shorter prefixes first,
/// each prefix advances by the midpoint rule
///
///   J_k += (J_{k-1} at step start + J_{k-1} at step end) / 2 * dW
///
/// where dW is the step's increment of the prefix's last driver (dt for
/// driver 0).
///
/// Throws std::invalid_argument when increments are missing or of the wrong
/// length for some nonzero letter of word.
double simulate_path_integrals(const Word& word, double horizon,
                               std::uint32_t steps,
                               const DriverIncrements& increments);

inline constexpr std::uint64_t kDefaultSimBudget = 10'000'000'000ULL;

/// Monte Carlo estimate of E J_word(horizon).
///
/// Runs cfg.paths independent paths whose increments come from streams
/// derived from (cfg.seed, path index, driver); see rng.hpp. Per-path values
/// are stored by path index and reduced with fixed-order pairwise summation,
/// so the result is bit-identical for any thread count. threads == 0 means
/// hardware concurrency. Attaches the closed-form expectation at the
/// horizon.
///
/// Throws cap_error when paths * steps * |word| exceeds budget, and
/// std::invalid_argument for a non-positive horizon.
SimResult estimate_expectation(const SimConfig& cfg, unsigned threads = 0,
                               std::uint64_t budget = kDefaultSimBudget);

}  // namespace stratexp
