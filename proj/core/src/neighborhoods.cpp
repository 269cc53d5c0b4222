#include "pfsp/neighborhoods.hpp"

#include <algorithm>
#include <stdexcept>

namespace pfsp {

std::string_view to_string(NeighborhoodKind kind)
{
    switch (kind) {
    case NeighborhoodKind::Exchange:
        return "exchange";
    case NeighborhoodKind::ForwardShift:
        return "forward-shift";
    case NeighborhoodKind::BackwardShift:
        return "backward-shift";
    }
    return "unknown";
}

namespace {

std::size_t pair_count(std::size_t n)
{
    return n < 2 ? 0 : n * (n - 1) / 2;
}

}  // namespace

std::vector<Permutation> exchange_all(std::span<const Job> perm)
{
    const std::size_t n = perm.size();
    std::vector<Permutation> out;
    out.reserve(pair_count(n));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Permutation& next = out.emplace_back(perm.begin(), perm.end());
            std::swap(next[i], next[j]);
        }
    }
    return out;
}

std::vector<Permutation> forward_shift_all(std::span<const Job> perm)
{
    const std::size_t n = perm.size();
    std::vector<Permutation> out;
    out.reserve(pair_count(n));
    for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            Permutation& next = out.emplace_back(perm.begin(), perm.end());
            // [j, i] rotated right by one: job i lands at j, j..i-1 move one later.
            std::rotate(next.begin() + j, next.begin() + i, next.begin() + i + 1);
        }
    }
    return out;
}

std::vector<Permutation> backward_shift_all(std::span<const Job> perm)
{
    const std::size_t n = perm.size();
    std::vector<Permutation> out;
    out.reserve(pair_count(n));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Permutation& next = out.emplace_back(perm.begin(), perm.end());
            // [i, j] rotated left by one: job i lands at j, i+1..j move one earlier.
            std::rotate(next.begin() + i, next.begin() + i + 1, next.begin() + j + 1);
        }
    }
    return out;
}

std::vector<Permutation> neighbors(NeighborhoodKind kind, std::span<const Job> perm)
{
    switch (kind) {
    case NeighborhoodKind::Exchange:
        return exchange_all(perm);
    case NeighborhoodKind::ForwardShift:
        return forward_shift_all(perm);
    case NeighborhoodKind::BackwardShift:
        return backward_shift_all(perm);
    }
    throw std::invalid_argument("unknown neighborhood kind");
}

Permutation reverse_block(std::span<const Job> perm, std::size_t start)
{
    if (start + 4 > perm.size()) {
        throw std::out_of_range("perturbation block exceeds the sequence");
    }
    Permutation out(perm.begin(), perm.end());
    std::reverse(out.begin() + start, out.begin() + start + 4);
    return out;
}

Permutation perturb(std::span<const Job> perm, Rng& rng)
{
    const std::size_t n = perm.size();
    if (n >= 4) {
        return reverse_block(perm, uniform_index(rng, n - 3));
    }
    Permutation out(perm.begin(), perm.end());
    if (n >= 2) {
        const std::size_t i = uniform_index(rng, n);
        std::size_t j = uniform_index(rng, n - 1);
        if (j >= i) {
            ++j;
        }
        std::swap(out[i], out[j]);
    }
    return out;
}

NeighborhoodOrder shuffle_order(Rng& rng)
{
    NeighborhoodOrder order = kAllNeighborhoods;
    shuffle(std::span<NeighborhoodKind>(order), rng);
    return order;
}

}  // namespace pfsp
