#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewrank/graph.hpp"

namespace skewrank {

// Brute-force oracles. None of these call the matching or skew-rank formula code.

inline constexpr int kBruteMatchingEdgeCap = 20;
inline constexpr int kBruteRankEdgeCap = 10;
inline constexpr int kZeroForcingOrderCap = 12;

/// Largest matching by exhaustive edge-subset search. Throws CapExceeded
/// above the edge cap (SKEWRANK_ORACLE_CAP overrides it).
int brute_matching(const Graph& g);

inline constexpr int kDefaultEntrySet[] = {1, 2, 3};

/// Minimum exact rank over all signed assignments with magnitudes in
/// entry_set; an upper bound on mr^-(g). Stops early once `lower_bound` is hit.
/// Throws CapExceeded above the edge cap.
int brute_min_skew_rank(const Graph& g, std::span<const int> entry_set = kDefaultEntrySet,
                        std::optional<int> lower_bound = std::nullopt);

/// Skew zero forcing number: smallest initially colored set whose closure under
/// "any vertex with exactly one uncolored neighbor colors it" is everything.
/// Throws CapExceeded for more than 12 vertices.
int skew_zero_forcing_number(const Graph& g);

/// Closure of `colored` (bitmask) under the skew color-change rule.
unsigned skew_forcing_closure(const Graph& g, unsigned colored);

}  // namespace skewrank
