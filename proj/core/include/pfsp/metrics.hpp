#pragma once

// D1/D2 approximation-quality metrics and the exhaustive Pareto-front oracle.

#include <cstddef>
#include <span>
#include <vector>

#include "pfsp/archive.hpp"
#include "pfsp/problem.hpp"

namespace pfsp {

using Point = std::vector<double>;

/// Outcome-space point set. Fronts read from reference files may carry non-integral values.
using Front = std::vector<Point>;

struct MetricReport {
    double d1 = 0.0;  ///< mean over reference points of the distance to the closest approximation point
    double d2 = 0.0;  ///< maximum of the same distance
    std::size_t reference_size = 0;
    std::size_t approx_size = 0;
};

/// Distances follow Czyzak & Jaszkiewicz: with w_k = 1 / range_k over the reference front
/// (w_k = 1 when range_k = 0), the cost of covering r by a is max_k w_k * max(0, a_k - r_k).
/// D1 averages over r the cheapest cover, D2 takes the worst.
/// Throws std::invalid_argument on an empty front or a dimension mismatch.
MetricReport d_metrics(const Front& reference, const Front& approx);

Front to_front(std::span<const ObjectiveVector> points);
Front to_front(std::span<const Solution> solutions);

/// Non-dominated subset of `points` with duplicates removed, sorted ascending.
Front non_dominated(Front points);

inline constexpr std::size_t kMaxOracleJobs = 10;

struct ExactFront {
    std::vector<ObjectiveVector> points;  ///< sorted ascending
    std::vector<Permutation> witnesses;   ///< lexicographically smallest permutation per point
};

/// Evaluates all n! sequences and keeps the non-dominated objective vectors.
/// Throws std::length_error when n > kMaxOracleJobs.
ExactFront brute_force_pareto(const Instance& inst);

}  // namespace pfsp
