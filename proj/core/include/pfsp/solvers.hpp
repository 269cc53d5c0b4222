#pragma once

// Pareto Iterated Local Search (PILS), the multi-operator search baseline (MOS),
// random sampling and the evaluations-to-local-optimum statistic.

#include <cstdint>
#include <string>
#include <vector>

#include "pfsp/archive.hpp"
#include "pfsp/problem.hpp"

namespace pfsp {

struct SolverConfig {
    std::uint64_t budget = 1;  ///< maximum number of evaluations, >= 1
    std::uint64_t seed = 0;
    bool record_trace = false;  ///< keep the intensification trajectory and local optima
};

struct RunResult {
    std::string instance;
    std::string algorithm;
    std::uint64_t seed = 0;
    std::uint64_t budget = 0;
    std::uint64_t evaluations_used = 0;
    std::vector<Solution> front;               ///< archive snapshot in export order
    std::vector<std::uint64_t> descent_lengths;  ///< neighbor evaluations per completed descent
    std::vector<ObjectiveVector> trajectory;   ///< current solution after every move (record_trace)
    std::vector<Permutation> local_optima;     ///< end point of every completed descent (record_trace)

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Uniformly random permutation of 0..n-1.
Permutation random_permutation(std::size_t n, Rng& rng);

/// Throws std::invalid_argument if cfg.budget == 0.
RunResult pils_run(const Instance& inst, const SolverConfig& cfg);

/// Throws std::invalid_argument if cfg.budget == 0.
RunResult mos_run(const Instance& inst, const SolverConfig& cfg);

/// Random-sampling baseline: cfg.budget uniformly random permutations, archive of the
/// non-dominated ones as the front. Sampled vectors are appended to `samples` in draw order.
RunResult sample_run(const Instance& inst, const SolverConfig& cfg, std::vector<ObjectiveVector>* samples = nullptr);

/// Objective vectors of `count` uniformly random permutations, in draw order.
/// Same draws as sample_run with the same seed.
std::vector<ObjectiveVector> random_sample(const Instance& inst, std::uint64_t count, std::uint64_t seed);

/// For each repetition, descends from a fresh random permutation to a solution that no
/// neighbor in any of the three neighborhoods dominates; returns the neighbor evaluations used.
std::vector<std::uint64_t> descent_stats(const Instance& inst, std::uint64_t repetitions, std::uint64_t seed);

/// True iff no neighbor of `perm` in any of the three neighborhoods dominates it.
bool is_locally_optimal(const Instance& inst, std::span<const Job> perm);

}  // namespace pfsp
