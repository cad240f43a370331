#pragma once

#include <optional>
#include <span>
#include <vector>

#include "skewrank/graph.hpp"

namespace skewrank {

/// A set of pairwise vertex-disjoint edges of a host graph, kept sorted.
class Matching {
public:
    Matching() = default;

    /// Throws std::invalid_argument if an edge is missing from `host` or two
    /// edges share an endpoint.
    Matching(const Graph& host, std::span<const Edge> edges);

    std::size_t size() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    int host_order() const noexcept { return static_cast<int>(mate_.size()); }

    bool is_saturated(Vertex v) const { return mate_.at(static_cast<std::size_t>(v)) >= 0; }
    std::optional<Vertex> mate(Vertex v) const;
    bool contains(Edge e) const;
    bool is_perfect() const { return 2 * edges_.size() == mate_.size(); }

    friend bool operator==(const Matching& a, const Matching& b) { return a.edges_ == b.edges_; }

private:
    std::vector<Edge> edges_;
    std::vector<Vertex> mate_;
};

/// Edge cap for the brute-force fallback on graphs that are not built from
/// tree and unicyclic components. Overridable through SKEWRANK_ORACLE_CAP.
int matching_brute_force_cap();

/// match(g). Per component: tree DP, cycle-edge split for unicyclic
/// components, capped brute force otherwise (throws CapExceeded).
int matching_number(const Graph& g);

/// A maximum matching; among all maximum matchings returns the one whose
/// sorted edge list is lexicographically smallest.
Matching maximum_matching(const Graph& g);

/// An M-augmenting path if one exists. Throws std::invalid_argument when m
/// is not a matching of g.
std::optional<Path> has_augmenting_path(const Graph& g, const Matching& m);

struct PerfectMatchingCount {
    enum class Kind { None, Unique, Multiple };
    Kind kind = Kind::None;
    std::optional<Matching> matching;  // set iff Unique
};

PerfectMatchingCount is_unique_perfect_matching(const Graph& g);

}  // namespace skewrank
