#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace skewrank {

using Vertex = int;

/// Unordered vertex pair stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool contains(Vertex x) const { return u == x || v == x; }
    Vertex other(Vertex x) const { return x == u ? v : u; }

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built; the edge
/// list is kept sorted and every adjacency list is sorted ascending.
class Graph {
public:
    Graph() = default;

    /// Throws GraphError on loops, duplicate edges or out-of-range endpoints.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool adjacent(Vertex a, Vertex b) const;
    bool has_vertex(Vertex v) const noexcept { return v >= 0 && v < n_; }

    /// Same vertex set plus/minus edges; validated like the constructor.
    Graph with_edge(Edge e) const;
    Graph without_edge(Edge e) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

/// Ordered list of distinct vertices, consecutive ones adjacent.
struct Path {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    Path reversed() const { return Path{{vertices.rbegin(), vertices.rend()}}; }
    bool contains(Vertex v) const;
    /// 1-based position of v on the path, or 0 when absent.
    int index_of(Vertex v) const;

    friend bool operator==(const Path&, const Path&) = default;
};

/// The unique cycle of a unicyclic graph in traversal order.
struct CycleInfo {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool contains(Vertex v) const;
    std::vector<Edge> edges() const;
};

enum class ShapeKind { Tree, Unicyclic, Forest, Other };

struct Shape {
    ShapeKind kind = ShapeKind::Other;
    std::optional<CycleInfo> cycle;  // set iff kind == Unicyclic
};

std::string to_string(ShapeKind kind);

/// A graph obtained by deleting or inducing, with label translation tables.
struct Relabeled {
    Graph graph;
    std::vector<Vertex> to_original;    // new label -> old label
    std::vector<Vertex> from_original;  // old label -> new label, -1 if removed
};

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// ---- structure ----------------------------------------------------------

bool is_path(const Graph& g, const Path& p);
bool is_induced_path(const Graph& g, const Path& p);

/// Connected components, each sorted ascending; components ordered by their
/// smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

Shape classify_shape(const Graph& g);

/// True iff g is a tree or a connected unicyclic graph.
bool is_tree(const Graph& g);
bool is_connected_unicyclic(const Graph& g);
/// Every component is a tree or a connected unicyclic graph.
bool components_tree_or_unicyclic(const Graph& g);

/// Cycle of a connected unicyclic graph; throws UnsupportedShape otherwise.
CycleInfo unique_cycle(const Graph& g);

bool is_cut_vertex(const Graph& g, Vertex v);

// ---- metric -------------------------------------------------------------

/// BFS distances; unreached vertices get kUnreachable.
std::vector<int> distances_from(const Graph& g, Vertex source);

/// Throws GraphError(Disconnected) on disconnected input.
int diameter(const Graph& g);

/// All shortest paths between vertex pairs at distance diam(g), each listed once
/// (oriented from the smaller endpoint label), in lexicographic order.
std::vector<Path> diametrical_paths(const Graph& g);

// ---- subgraphs ----------------------------------------------------------

Relabeled delete_vertices(const Graph& g, std::span<const Vertex> removed);
Relabeled induced_subgraph(const Graph& g, std::span<const Vertex> kept);
/// Relabel vertex v as perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);
/// Disjoint union, b's labels shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

// ---- text formats -------------------------------------------------------

enum class GraphFormat { EdgeList, Graph6 };

Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Picks graph6 when the text is a single token line, edge-list otherwise.
GraphFormat guess_format(std::string_view text);

}  // namespace skewrank
