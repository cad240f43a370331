#include "skewrank/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "skewrank/error.hpp"

namespace skewrank {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), edges_(edges.begin(), edges.end()) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw GraphError(GraphError::Kind::Loop, "loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n)
            throw GraphError(GraphError::Kind::VertexOutOfRange,
                             "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} out of range for n=" +
                                 std::to_string(n));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw GraphError(GraphError::Kind::DuplicateEdge,
                         "duplicate edge {" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
    adj_.assign(static_cast<std::size_t>(n), {});
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
    if (!has_vertex(a) || !has_vertex(b)) return false;
    const auto& list = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(list.begin(), list.end(), b);
}

Graph Graph::with_edge(Edge e) const {
    std::vector<Edge> es = edges_;
    es.push_back(e);
    return Graph(n_, es);
}

Graph Graph::without_edge(Edge e) const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (const Edge& f : edges_)
        if (f != e) es.push_back(f);
    if (es.size() == edges_.size()) throw std::invalid_argument("edge not present");
    return Graph(n_, es);
}

bool Path::contains(Vertex v) const { return index_of(v) != 0; }

int Path::index_of(Vertex v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    return it == vertices.end() ? 0 : static_cast<int>(it - vertices.begin()) + 1;
}

bool CycleInfo::contains(Vertex v) const { return std::find(vertices.begin(), vertices.end(), v) != vertices.end(); }

std::vector<Edge> CycleInfo::edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
    return out;
}

std::string to_string(ShapeKind kind) {
    switch (kind) {
        case ShapeKind::Tree: return "tree";
        case ShapeKind::Unicyclic: return "unicyclic";
        case ShapeKind::Forest: return "forest";
        case ShapeKind::Other: return "other";
    }
    return "other";
}

bool is_path(const Graph& g, const Path& p) {
    if (p.vertices.empty()) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        Vertex v = p.vertices[i];
        if (!g.has_vertex(v) || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
        if (i > 0 && !g.adjacent(p.vertices[i - 1], v)) return false;
    }
    return true;
}

bool is_induced_path(const Graph& g, const Path& p) {
    if (!is_path(g, p)) return false;
    for (std::size_t i = 0; i < p.vertices.size(); ++i)
        for (std::size_t j = i + 2; j < p.vertices.size(); ++j)
            if (g.adjacent(p.vertices[i], p.vertices[j])) return false;
    return true;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<Vertex> stack{s};
        comp[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const Graph& g) { return g.order() > 0 && connected_components(g).size() == 1; }

namespace {

// Cycle of a connected graph with |E| = |V|: strip leaves until only the cycle remains,
// then walk it starting from its smallest vertex towards its smaller neighbor.
CycleInfo extract_cycle(const Graph& g) {
    std::vector<int> deg(static_cast<std::size_t>(g.order()));
    std::vector<char> removed(static_cast<std::size_t>(g.order()), 0);
    std::deque<Vertex> leaves;
    for (Vertex v = 0; v < g.order(); ++v) {
        deg[static_cast<std::size_t>(v)] = g.degree(v);
        if (deg[static_cast<std::size_t>(v)] <= 1) leaves.push_back(v);
    }
    while (!leaves.empty()) {
        Vertex v = leaves.front();
        leaves.pop_front();
        if (removed[static_cast<std::size_t>(v)]) continue;
        removed[static_cast<std::size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v))
            if (!removed[static_cast<std::size_t>(w)] && --deg[static_cast<std::size_t>(w)] == 1) leaves.push_back(w);
    }
    Vertex start = -1;
    for (Vertex v = 0; v < g.order() && start < 0; ++v)
        if (!removed[static_cast<std::size_t>(v)]) start = v;
    CycleInfo c;
    if (start < 0) return c;
    Vertex prev = -1, cur = start;
    do {
        c.vertices.push_back(cur);
        Vertex next = -1;
        for (Vertex w : g.neighbors(cur)) {
            if (removed[static_cast<std::size_t>(w)] || w == prev) continue;
            next = w;  // neighbors are sorted, so the first step goes to the smaller one
            break;
        }
        prev = cur;
        cur = next;
    } while (cur != start && cur >= 0);
    return c;
}

}  // namespace

Shape classify_shape(const Graph& g) {
    const auto comps = connected_components(g);
    const auto n = static_cast<std::size_t>(g.order());
    const bool connected = comps.size() == 1;
    if (connected && g.size() + 1 == n) return {ShapeKind::Tree, std::nullopt};
    if (connected && g.size() == n) return {ShapeKind::Unicyclic, extract_cycle(g)};
    // acyclic iff |E| = |V| - #components
    if (g.size() + comps.size() == n) return {ShapeKind::Forest, std::nullopt};
    return {ShapeKind::Other, std::nullopt};
}

bool is_tree(const Graph& g) { return classify_shape(g).kind == ShapeKind::Tree; }

bool is_connected_unicyclic(const Graph& g) { return classify_shape(g).kind == ShapeKind::Unicyclic; }

bool components_tree_or_unicyclic(const Graph& g) {
    std::vector<int> comp_of(static_cast<std::size_t>(g.order()));
    const auto comps = connected_components(g);
    std::vector<std::size_t> edge_count(comps.size(), 0);
    for (std::size_t c = 0; c < comps.size(); ++c)
        for (Vertex v : comps[c]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    for (const Edge& e : g.edges()) ++edge_count[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(e.u)])];
    for (std::size_t c = 0; c < comps.size(); ++c)
        if (edge_count[c] > comps[c].size()) return false;
    return true;
}

CycleInfo unique_cycle(const Graph& g) {
    Shape s = classify_shape(g);
    if (s.kind != ShapeKind::Unicyclic) throw UnsupportedShape("graph is not connected unicyclic");
    return *s.cycle;
}

bool is_cut_vertex(const Graph& g, Vertex v) {
    if (!g.has_vertex(v)) throw std::out_of_range("vertex out of range");
    const std::size_t before = connected_components(g).size();
    const Vertex removed[] = {v};
    return connected_components(delete_vertices(g, removed).graph).size() > before;
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
    if (!g.has_vertex(source)) throw std::out_of_range("vertex " + std::to_string(source) + " out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.order()), kUnreachable);
    std::deque<Vertex> queue{source};
    dist[static_cast<std::size_t>(source)] = 0;
    while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] == kUnreachable) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

int diameter(const Graph& g) {
    if (!is_connected(g)) throw GraphError(GraphError::Kind::Disconnected, "diameter of a disconnected graph");
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
        const auto d = distances_from(g, v);
        best = std::max(best, *std::max_element(d.begin(), d.end()));
    }
    return best;
}

namespace {

void collect_shortest(const Graph& g, const std::vector<int>& dist_to_target, Vertex v, std::vector<Vertex>& prefix,
                      std::vector<Path>& out) {
    prefix.push_back(v);
    if (dist_to_target[static_cast<std::size_t>(v)] == 0) {
        out.push_back(Path{prefix});
    } else {
        for (Vertex w : g.neighbors(v))
            if (dist_to_target[static_cast<std::size_t>(w)] == dist_to_target[static_cast<std::size_t>(v)] - 1)
                collect_shortest(g, dist_to_target, w, prefix, out);
    }
    prefix.pop_back();
}

}  // namespace

std::vector<Path> diametrical_paths(const Graph& g) {
    const int diam = diameter(g);
    std::vector<Path> out;
    std::vector<std::vector<int>> dist;
    dist.reserve(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) dist.push_back(distances_from(g, v));
    for (Vertex a = 0; a < g.order(); ++a) {
        for (Vertex b = a + 1; b < g.order(); ++b) {
            if (dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != diam) continue;
            std::vector<Vertex> prefix;
            collect_shortest(g, dist[static_cast<std::size_t>(b)], a, prefix, out);
        }
    }
    if (diam == 0) out.push_back(Path{{0}});
    std::sort(out.begin(), out.end(), [](const Path& x, const Path& y) { return x.vertices < y.vertices; });
    return out;
}

Relabeled delete_vertices(const Graph& g, std::span<const Vertex> removed) {
    std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : removed) {
        if (!g.has_vertex(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        gone[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!gone[static_cast<std::size_t>(v)]) kept.push_back(v);
    return induced_subgraph(g, kept);
}

Relabeled induced_subgraph(const Graph& g, std::span<const Vertex> kept) {
    Relabeled r;
    r.from_original.assign(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> sorted(kept.begin(), kept.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v : sorted) {
        if (!g.has_vertex(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
        r.from_original[static_cast<std::size_t>(v)] = static_cast<Vertex>(r.to_original.size());
        r.to_original.push_back(v);
    }
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        Vertex a = r.from_original[static_cast<std::size_t>(e.u)];
        Vertex b = r.from_original[static_cast<std::size_t>(e.v)];
        if (a >= 0 && b >= 0) es.emplace_back(a, b);
    }
    r.graph = Graph(static_cast<int>(r.to_original.size()), es);
    return r;
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.order()) throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> es;
    es.reserve(g.size());
    for (const Edge& e : g.edges())
        es.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return Graph(g.order(), es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<Edge> es = a.edges();
    for (const Edge& e : b.edges()) es.emplace_back(e.u + a.order(), e.v + a.order());
    return Graph(a.order() + b.order(), es);
}

}  // namespace skewrank
