#include "stratexp/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>

#include "stratexp/errors.hpp"
#include "stratexp/expectation.hpp"
#include "stratexp/rng.hpp"

namespace stratexp {

double simulate_path_integrals(const Word& word, double horizon,
                               std::uint32_t steps,
                               const DriverIncrements& increments) {
    if (steps == 0)
        throw std::invalid_argument("simulate_path_integrals: steps must be >= 1");
    for (Word::Letter m : word) {
        if (m == 0) continue;
        auto it = increments.find(m);
        if (it == increments.end())
            throw std::invalid_argument(
                "simulate_path_integrals: no increments for driver " +
                std::to_string(m));
        if (it->second.size() != steps)
            throw std::invalid_argument(
                "simulate_path_integrals: increments for driver " +
                std::to_string(m) + " have length " +
                std::to_string(it->second.size()) + ", expected " +
                std::to_string(steps));
    }

    double dt = horizon / static_cast<double>(steps);
    std::vector<double> prefix(word.size() + 1, 0.0);
    prefix[0] = 1.0;

    for (std::uint32_t step = 0; step < steps; ++step) {
        double shorter_start = prefix[0];
        for (std::size_t k = 1; k <= word.size(); ++k) {
            Word::Letter m = word[k - 1];
            double dw = (m == 0) ? dt : increments.at(m)[step];
            double own_start = prefix[k];
            // prefix[k-1] already holds its end-of-step value here.
            prefix[k] += 0.5 * (shorter_start + prefix[k - 1]) * dw;
            shorter_start = own_start;
        }
    }
    return prefix[word.size()];
}

namespace {

// Fixed-order pairwise sum; deterministic for a given array and numerically
// stable enough for 1e6-scale path counts.
double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 16) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

double one_path(const Word& word, double horizon, std::uint32_t steps,
                std::uint64_t seed, std::uint64_t path,
                const std::vector<Word::Letter>& drivers,
                DriverIncrements& scratch) {
    double dt = horizon / static_cast<double>(steps);
    double scale = std::sqrt(dt);
    for (Word::Letter m : drivers) {
        GaussianStream gauss(stream_state(seed, path, m));
        std::vector<double>& dw = scratch[m];
        dw.resize(steps);
        for (std::uint32_t i = 0; i < steps; ++i) dw[i] = scale * gauss.next();
    }
    return simulate_path_integrals(word, horizon, steps, scratch);
}

}  // namespace

SimResult estimate_expectation(const SimConfig& cfg, unsigned threads,
                               std::uint64_t budget) {
    if (!(cfg.horizon > 0.0))
        throw std::invalid_argument("estimate_expectation: horizon must be > 0");
    if (cfg.steps == 0 || cfg.paths == 0)
        throw std::invalid_argument(
            "estimate_expectation: steps and paths must be >= 1");
    unsigned __int128 cost = static_cast<unsigned __int128>(cfg.paths) *
                             cfg.steps * cfg.word.size();
    if (cost > budget)
        throw cap_error("estimate_expectation: paths*steps*|word| exceeds the budget of " +
                        std::to_string(budget));

    std::set<Word::Letter> distinct(cfg.word.begin(), cfg.word.end());
    distinct.erase(0);
    std::vector<Word::Letter> drivers(distinct.begin(), distinct.end());

    std::vector<double> values(cfg.paths);

    unsigned workers = threads != 0 ? threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    constexpr std::uint64_t kBlock = 256;  // paths per work unit
    std::atomic<std::uint64_t> next_block{0};
    std::uint64_t blocks = (std::uint64_t{cfg.paths} + kBlock - 1) / kBlock;

    auto run = [&]() {
        DriverIncrements scratch;
        while (true) {
            std::uint64_t b = next_block.fetch_add(1);
            if (b >= blocks) break;
            std::uint32_t lo = static_cast<std::uint32_t>(b * kBlock);
            std::uint32_t hi =
                static_cast<std::uint32_t>(std::min<std::uint64_t>(cfg.paths, b * kBlock + kBlock));
            for (std::uint32_t p = lo; p < hi; ++p)
                values[p] = one_path(cfg.word, cfg.horizon, cfg.steps, cfg.seed,
                                     p, drivers, scratch);
        }
    };

    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }

    double mean = pairwise_sum(values) / static_cast<double>(cfg.paths);
    double std_error = 0.0;
    if (cfg.paths > 1) {
        std::vector<double> sq(cfg.paths);
        for (std::uint32_t p = 0; p < cfg.paths; ++p) {
            double d = values[p] - mean;
            sq[p] = d * d;
        }
        double variance = pairwise_sum(sq) / static_cast<double>(cfg.paths - 1);
        std_error = std::sqrt(variance / static_cast<double>(cfg.paths));
    }

    SimResult out;
    out.mean = mean;
    out.std_error = std_error;
    out.paths = cfg.paths;
    out.exact = expect_strat_at(cfg.word, Rational(cfg.horizon));
    return out;
}

}  // namespace stratexp
