#pragma once

// Non-dominated approximation set with per-entry "neighborhoods investigated" flags.

#include <optional>
#include <span>
#include <vector>

#include "pfsp/problem.hpp"
#include "pfsp/rng.hpp"

namespace pfsp {

/// Pareto dominance for minimization: a <= b componentwise and a < b somewhere.
/// Throws std::invalid_argument when the dimensions differ.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

/// A sequence together with its objective vector.
struct Solution {
    Permutation perm;
    ObjectiveVector obj;

    friend bool operator==(const Solution&, const Solution&) = default;
};

struct ArchiveEntry {
    Permutation perm;
    ObjectiveVector obj;
    bool investigated = false;

    friend bool operator==(const ArchiveEntry&, const ArchiveEntry&) = default;
};

/// Linear-scan archive. Entries are mutually non-dominated; equal objective vectors
/// reached by different permutations are all kept.
class ParetoArchive {
public:
    /// Inserts (perm, obj) unless an entry dominates obj or the same permutation is already
    /// stored. Entries dominated by obj are dropped. New entries start uninvestigated.
    bool update(Permutation perm, ObjectiveVector obj);

    bool contains(std::span<const Job> perm) const;

    /// Flags the entry holding `perm`; false if no such entry exists.
    bool mark_investigated(std::span<const Job> perm);

    /// Uniform pick among uninvestigated entries, or nullopt if all are investigated.
    std::optional<ArchiveEntry> select_uninvestigated(Rng& rng) const;

    /// Uniform pick among all entries. Throws std::logic_error on an empty archive.
    const ArchiveEntry& select_any(Rng& rng) const;

    const std::vector<ArchiveEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// Entries ordered by objective vector, then permutation. This is the export order.
    std::vector<ArchiveEntry> sorted_entries() const;

    /// Sorted copy without the investigated flags; what a finished run reports.
    std::vector<Solution> snapshot() const;

    std::vector<ObjectiveVector> objective_vectors() const;

private:
    std::vector<ArchiveEntry> entries_;
};

/// True iff no vector in `points` dominates another.
bool mutually_non_dominated(std::span<const ObjectiveVector> points);

}  // namespace pfsp
