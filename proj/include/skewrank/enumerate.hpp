#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "skewrank/graph.hpp"

namespace skewrank {

enum class Family { Trees, Unicyclic, Labeled };

std::string to_string(Family f);
/// "trees", "unicyclic" or "labeled"; throws std::invalid_argument otherwise.
Family parse_family(const std::string& name);

inline constexpr int kMaxTreeOrder = 12;
inline constexpr int kMaxUnicyclicOrder = 11;
inline constexpr int kMaxLabeledOrder = 6;
inline constexpr int kMaxBruteCanonicalOrder = 9;

/// Canonical string of a tree (rooted codes at the centers) or a connected
/// unicyclic graph (rooted codes around the cycle, minimized over rotations and
/// reflections). Equal strings iff isomorphic. Other shapes fall back to
/// canonical_form_bruteforce.
std::string canonical_form(const Graph& g);

/// Lexicographically greatest upper-triangle adjacency string over all vertex
/// orders with non-increasing degree. Throws CapExceeded above 9 vertices.
std::string canonical_form_bruteforce(const Graph& g);

/// Number of automorphisms, by trying every permutation. n <= 9.
std::uint64_t automorphism_count(const Graph& g);

/// One representative per isomorphism class of the given order, in order of
/// canonical form. Throws CapExceeded above the family's cap. Labeled returns
/// every graph on vertex set {0..n-1}.
std::vector<Graph> enumerate_family(Family f, int n);

/// Smallest order a family has graphs of (1 for trees and labeled, 3 for unicyclic).
int family_min_order(Family f);
int family_max_order(Family f);

}  // namespace skewrank
