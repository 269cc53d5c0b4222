#pragma once

// Test-only reference implementations. Each one takes a different route from the library
// code it checks.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "pfsp/metrics.hpp"
#include "pfsp/problem.hpp"

namespace pfsp::testing {

/// Random instance with p in [lo, hi] and due dates in [0, due_hi].
inline Instance random_instance(std::size_t n, std::size_t m, std::uint64_t seed, Time lo = 1, Time hi = 99,
                                Time due_hi = 0)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Time> dist(lo, hi);
    std::uniform_int_distribution<Time> due_dist(0, due_hi);
    std::vector<std::vector<Time>> p(n, std::vector<Time>(m));
    for (auto& row : p) {
        for (auto& t : row) {
            t = dist(rng);
        }
    }
    std::vector<Time> d(n);
    for (auto& x : d) {
        x = due_dist(rng);
    }
    return Instance("random", std::move(p), std::move(d));
}

/// Completion time of the job at sequence position `pos` on machine `k` as the longest
/// monotone lattice path from (0, 0) to (pos, k) in the position x machine grid, by
/// exhaustive path enumeration.
inline Time longest_path(const Instance& inst, const Permutation& perm, std::size_t pos, std::size_t k)
{
    const Time here = inst.processing(perm[pos], k);
    Time best = 0;
    if (pos > 0) {
        best = std::max(best, longest_path(inst, perm, pos - 1, k));
    }
    if (k > 0) {
        best = std::max(best, longest_path(inst, perm, pos, k - 1));
    }
    return best + here;
}

inline ObjectiveVector evaluate_by_paths(const Instance& inst, const Permutation& perm)
{
    const std::size_t last = inst.machines() - 1;
    Time makespan = 0;
    Time tardiness = 0;
    for (std::size_t pos = 0; pos < perm.size(); ++pos) {
        const Time c = longest_path(inst, perm, pos, last);
        makespan = std::max(makespan, c);
        tardiness += std::max<Time>(0, c - inst.due_date(perm[pos]));
    }
    return ObjectiveVector{{makespan, tardiness}};
}

inline bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b)
{
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) {
            return false;
        }
    }
    return true;
}

/// O(N^2) non-dominated filter over distinct vectors, sorted ascending.
inline std::vector<ObjectiveVector> nondominated_filter(std::vector<ObjectiveVector> points)
{
    std::vector<ObjectiveVector> out;
    for (const auto& p : points) {
        bool dominated = false;
        for (const auto& q : points) {
            if (weakly_dominates(q, p) && q != p) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Every objective vector of every permutation, enumerated with std::next_permutation.
inline std::vector<ObjectiveVector> all_objectives(const Instance& inst)
{
    std::vector<ObjectiveVector> out;
    Permutation perm = identity_permutation(inst.jobs());
    do {
        out.push_back(evaluate(inst, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Remove the job at `from`, insert it so that it ends up at position `to`.
inline Permutation move_job(Permutation perm, std::size_t from, std::size_t to)
{
    const Job job = perm[from];
    perm.erase(perm.begin() + static_cast<std::ptrdiff_t>(from));
    perm.insert(perm.begin() + static_cast<std::ptrdiff_t>(to), job);
    return perm;
}

inline std::vector<ObjectiveVector> sorted_vectors(std::vector<ObjectiveVector> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace pfsp::testing
