#include "pfsp/archive.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfsp {

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("objective vectors differ in dimension");
    }
    bool strict = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) {
            return false;
        }
        strict = strict || a[k] < b[k];
    }
    return strict;
}

bool ParetoArchive::update(Permutation perm, ObjectiveVector obj)
{
    for (const auto& e : entries_) {
        if (dominates(e.obj, obj)) {
            return false;
        }
        if (e.obj == obj && e.perm == perm) {
            return false;
        }
    }
    std::erase_if(entries_, [&](const ArchiveEntry& e) { return dominates(obj, e.obj); });
    entries_.push_back(ArchiveEntry{std::move(perm), std::move(obj), false});
    return true;
}

bool ParetoArchive::contains(std::span<const Job> perm) const
{
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const ArchiveEntry& e) { return std::ranges::equal(e.perm, perm); });
}

bool ParetoArchive::mark_investigated(std::span<const Job> perm)
{
    for (auto& e : entries_) {
        if (std::ranges::equal(e.perm, perm)) {
            e.investigated = true;
            return true;
        }
    }
    return false;
}

std::optional<ArchiveEntry> ParetoArchive::select_uninvestigated(Rng& rng) const
{
    std::vector<std::size_t> open;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (!entries_[i].investigated) {
            open.push_back(i);
        }
    }
    if (open.empty()) {
        return std::nullopt;
    }
    return entries_[open[uniform_index(rng, open.size())]];
}

const ArchiveEntry& ParetoArchive::select_any(Rng& rng) const
{
    if (entries_.empty()) {
        throw std::logic_error("cannot select from an empty archive");
    }
    return entries_[uniform_index(rng, entries_.size())];
}

std::vector<ArchiveEntry> ParetoArchive::sorted_entries() const
{
    auto out = entries_;
    std::sort(out.begin(), out.end(), [](const ArchiveEntry& a, const ArchiveEntry& b) {
        if (a.obj != b.obj) {
            return a.obj < b.obj;
        }
        return a.perm < b.perm;
    });
    return out;
}

std::vector<Solution> ParetoArchive::snapshot() const
{
    std::vector<Solution> out;
    out.reserve(entries_.size());
    for (auto& e : sorted_entries()) {
        out.push_back(Solution{std::move(e.perm), std::move(e.obj)});
    }
    return out;
}

std::vector<ObjectiveVector> ParetoArchive::objective_vectors() const
{
    std::vector<ObjectiveVector> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) {
        out.push_back(e.obj);
    }
    return out;
}

bool mutually_non_dominated(std::span<const ObjectiveVector> points)
{
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (i != j && dominates(points[i], points[j])) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace pfsp
