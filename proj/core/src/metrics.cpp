#include "pfsp/metrics.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace pfsp {

namespace {

bool point_dominates(const Point& a, const Point& b)
{
    bool strict = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) {
            return false;
        }
        strict = strict || a[k] < b[k];
    }
    return strict;
}

void require_shape(const Front& front, std::size_t dim, const char* which)
{
    if (front.empty()) {
        throw std::invalid_argument(std::string(which) + " front is empty");
    }
    for (const auto& p : front) {
        if (p.size() != dim) {
            throw std::invalid_argument(std::string(which) + " front mixes objective dimensions");
        }
    }
}

}  // namespace

MetricReport d_metrics(const Front& reference, const Front& approx)
{
    if (reference.empty() || approx.empty()) {
        throw std::invalid_argument(reference.empty() ? "reference front is empty" : "approximation front is empty");
    }
    const std::size_t dim = reference.front().size();
    require_shape(reference, dim, "reference");
    require_shape(approx, dim, "approximation");

    std::vector<double> weight(dim, 1.0);
    for (std::size_t k = 0; k < dim; ++k) {
        auto [lo, hi] = std::minmax_element(reference.begin(), reference.end(),
                                            [k](const Point& a, const Point& b) { return a[k] < b[k]; });
        const double range = (*hi)[k] - (*lo)[k];
        if (range > 0.0) {
            weight[k] = 1.0 / range;
        }
    }

    double sum = 0.0;
    double worst = 0.0;
    for (const auto& r : reference) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& a : approx) {
            double cost = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                cost = std::max(cost, weight[k] * std::max(0.0, a[k] - r[k]));
            }
            best = std::min(best, cost);
        }
        sum += best;
        worst = std::max(worst, best);
    }
    return MetricReport{sum / static_cast<double>(reference.size()), worst, reference.size(), approx.size()};
}

Front to_front(std::span<const ObjectiveVector> points)
{
    Front out;
    out.reserve(points.size());
    for (const auto& p : points) {
        out.emplace_back(p.values.begin(), p.values.end());
    }
    return out;
}

Front to_front(std::span<const Solution> solutions)
{
    Front out;
    out.reserve(solutions.size());
    for (const auto& e : solutions) {
        out.emplace_back(e.obj.values.begin(), e.obj.values.end());
    }
    return out;
}

Front non_dominated(Front points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    Front out;
    for (const auto& p : points) {
        // Sorted order: only an earlier point can dominate p.
        bool dominated = false;
        for (const auto& q : out) {
            if (point_dominates(q, p)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            out.push_back(p);
        }
    }
    return out;
}

namespace {

std::uint64_t factorial(std::size_t n)
{
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

// Permutation of 0..n-1 with lexicographic rank `rank`.
Permutation unrank(std::size_t n, std::uint64_t rank)
{
    Permutation pool = identity_permutation(n);
    Permutation out;
    out.reserve(n);
    for (std::size_t i = n; i > 0; --i) {
        const std::uint64_t block = factorial(i - 1);
        const auto pick = static_cast<std::size_t>(rank / block);
        rank %= block;
        out.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return out;
}

}  // namespace

ExactFront brute_force_pareto(const Instance& inst)
{
    const std::size_t n = inst.jobs();
    if (n > kMaxOracleJobs) {
        throw std::length_error("exhaustive enumeration refused: " + std::to_string(n) + " jobs exceeds the limit of " +
                                std::to_string(kMaxOracleJobs));
    }

    struct Sample {
        Time makespan;
        Time tardiness;
        std::uint64_t rank;
    };
    std::vector<Sample> samples;
    samples.reserve(factorial(n));

    Evaluator eval(inst);
    Permutation perm = identity_permutation(n);
    std::uint64_t rank = 0;
    do {
        const auto obj = eval.evaluate(perm);
        samples.push_back({obj[0], obj[1], rank++});
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) {
        if (a.makespan != b.makespan) {
            return a.makespan < b.makespan;
        }
        if (a.tardiness != b.tardiness) {
            return a.tardiness < b.tardiness;
        }
        return a.rank < b.rank;
    });

    // Sweep by ascending makespan: a point is efficient iff its tardiness beats every
    // tardiness seen at a strictly smaller makespan. The first sample of each group wins.
    ExactFront front;
    Time best_tardiness = std::numeric_limits<Time>::max();
    for (std::size_t i = 0; i < samples.size();) {
        const Sample& head = samples[i];
        if (head.tardiness < best_tardiness) {
            front.points.push_back(ObjectiveVector{{head.makespan, head.tardiness}});
            front.witnesses.push_back(unrank(n, head.rank));
            best_tardiness = head.tardiness;
        }
        while (i < samples.size() && samples[i].makespan == head.makespan) {
            ++i;
        }
    }
    return front;
}

}  // namespace pfsp
