#pragma once

#include <cstdint>
#include <vector>

#include "schub/bigint.hpp"

namespace schub {

// Exact rank over Z (equivalently Q) by fraction-free Bareiss elimination
// with row and column pivoting. This is the authoritative path.
int exact_rank(std::vector<std::vector<Int>> m);

// Rank over F_p; always a lower bound for the rank over Q.
inline constexpr std::uint64_t kRankPrime = 9223372036854775783ULL; // largest prime < 2^63
int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::uint64_t p = kRankPrime);

// Exact rank with a modular fast path: when the F_p rank already equals
// min(rows, cols) the exact rank is pinned; otherwise falls back to the
// exact Bareiss elimination.
int exact_rank_hybrid(const std::vector<std::vector<std::int64_t>>& m);

} // namespace schub
