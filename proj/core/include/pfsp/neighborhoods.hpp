#pragma once

// Intensification neighborhoods (exchange, forward shift, backward shift) and the
// perturbation move used for diversification.

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "pfsp/problem.hpp"
#include "pfsp/rng.hpp"

namespace pfsp {

enum class NeighborhoodKind { Exchange, ForwardShift, BackwardShift };

inline constexpr std::array<NeighborhoodKind, 3> kAllNeighborhoods{
    NeighborhoodKind::Exchange, NeighborhoodKind::ForwardShift, NeighborhoodKind::BackwardShift};

using NeighborhoodOrder = std::array<NeighborhoodKind, 3>;

std::string_view to_string(NeighborhoodKind kind);

/// Swap of positions i < j, enumerated i ascending then j ascending. n(n-1)/2 entries.
std::vector<Permutation> exchange_all(std::span<const Job> perm);

/// Job at position i reinserted at an earlier position j < i.
/// Enumerated source i ascending, then target j ascending. n(n-1)/2 entries.
std::vector<Permutation> forward_shift_all(std::span<const Job> perm);

/// Job at position i reinserted at a later position j > i.
/// Enumerated source i ascending, then target j ascending. n(n-1)/2 entries.
std::vector<Permutation> backward_shift_all(std::span<const Job> perm);

std::vector<Permutation> neighbors(NeighborhoodKind kind, std::span<const Job> perm);

/// Reverses the four jobs at positions start..start+3. Requires start + 4 <= n.
Permutation reverse_block(std::span<const Job> perm, std::size_t start);

/// Random 4-block reversal. For 2 <= n < 4 falls back to one random exchange; n < 2 returns a copy.
Permutation perturb(std::span<const Job> perm, Rng& rng);

/// Uniformly random order of the three neighborhood kinds.
NeighborhoodOrder shuffle_order(Rng& rng);

}  // namespace pfsp
