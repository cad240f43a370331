#include "skewrank/matching.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

#include "skewrank/caps.hpp"
#include "skewrank/error.hpp"

namespace skewrank {

int oracle_edge_cap(int default_cap) {
    if (const char* env = std::getenv("SKEWRANK_ORACLE_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
    }
    return default_cap;
}

Matching::Matching(const Graph& host, std::span<const Edge> edges) : edges_(edges.begin(), edges.end()) {
    mate_.assign(static_cast<std::size_t>(host.order()), -1);
    std::sort(edges_.begin(), edges_.end());
    for (const Edge& e : edges_) {
        if (!host.adjacent(e.u, e.v))
            throw std::invalid_argument("matching edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        "} is not an edge of the host");
        if (mate_[static_cast<std::size_t>(e.u)] >= 0 || mate_[static_cast<std::size_t>(e.v)] >= 0)
            throw std::invalid_argument("matching edges share an endpoint");
        mate_[static_cast<std::size_t>(e.u)] = e.v;
        mate_[static_cast<std::size_t>(e.v)] = e.u;
    }
}

std::optional<Vertex> Matching::mate(Vertex v) const {
    Vertex m = mate_.at(static_cast<std::size_t>(v));
    if (m < 0) return std::nullopt;
    return m;
}

bool Matching::contains(Edge e) const { return std::binary_search(edges_.begin(), edges_.end(), e); }

int matching_brute_force_cap() { return oracle_edge_cap(16); }

namespace {

using Mask = std::vector<char>;

// Maximum matching size of a tree given by `verts` (all alive), ignoring edge `skip`.
int tree_matching(const Graph& g, const Mask& alive, Vertex root, Edge skip) {
    struct Frame {
        Vertex v, parent;
        std::size_t next;
    };
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> free_best(n, 0), best(n, 0);
    std::vector<Frame> stack{{root, -1, 0}};
    while (!stack.empty()) {
        Frame& f = stack.back();
        const auto& nb = g.neighbors(f.v);
        if (f.next < nb.size()) {
            Vertex w = nb[f.next++];
            if (w == f.parent || !alive[static_cast<std::size_t>(w)] || Edge(f.v, w) == skip) continue;
            stack.push_back({w, f.v, 0});
            continue;
        }
        // post-order: combine children
        const Vertex v = f.v, parent = f.parent;
        int sum = 0, gain = 0;
        for (Vertex w : nb) {
            if (w == parent || !alive[static_cast<std::size_t>(w)] || Edge(v, w) == skip) continue;
            sum += best[static_cast<std::size_t>(w)];
            gain = std::max(gain, 1 + free_best[static_cast<std::size_t>(w)] - best[static_cast<std::size_t>(w)]);
        }
        free_best[static_cast<std::size_t>(v)] = sum;
        best[static_cast<std::size_t>(v)] = sum + gain;
        stack.pop_back();
    }
    return best[static_cast<std::size_t>(root)];
}

int brute_component(const Graph& g, std::vector<char> alive, const std::vector<Vertex>& verts) {
    std::function<int(std::size_t)> rec = [&](std::size_t i) -> int {
        while (i < verts.size() && !alive[static_cast<std::size_t>(verts[i])]) ++i;
        if (i == verts.size()) return 0;
        const Vertex v = verts[i];
        alive[static_cast<std::size_t>(v)] = 0;
        int best = rec(i + 1);
        for (Vertex w : g.neighbors(v)) {
            if (!alive[static_cast<std::size_t>(w)]) continue;
            alive[static_cast<std::size_t>(w)] = 0;
            best = std::max(best, 1 + rec(i + 1));
            alive[static_cast<std::size_t>(w)] = 1;
        }
        alive[static_cast<std::size_t>(v)] = 1;
        return best;
    };
    return rec(0);
}

// Cycle vertices of a unicyclic component (leaf stripping restricted to `verts`).
std::vector<Vertex> component_cycle(const Graph& g, const Mask& alive, const std::vector<Vertex>& verts) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> deg(n, 0);
    Mask stripped(n, 0);
    std::vector<Vertex> queue;
    for (Vertex v : verts) {
        for (Vertex w : g.neighbors(v))
            if (alive[static_cast<std::size_t>(w)]) ++deg[static_cast<std::size_t>(v)];
        if (deg[static_cast<std::size_t>(v)] <= 1) queue.push_back(v);
    }
    while (!queue.empty()) {
        Vertex v = queue.back();
        queue.pop_back();
        if (stripped[static_cast<std::size_t>(v)]) continue;
        stripped[static_cast<std::size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v))
            if (alive[static_cast<std::size_t>(w)] && !stripped[static_cast<std::size_t>(w)] &&
                --deg[static_cast<std::size_t>(w)] == 1)
                queue.push_back(w);
    }
    std::vector<Vertex> cycle;
    for (Vertex v : verts)
        if (!stripped[static_cast<std::size_t>(v)]) cycle.push_back(v);
    return cycle;
}

int matching_number_masked(const Graph& g, const Mask& alive) {
    const auto n = static_cast<std::size_t>(g.order());
    Mask seen(n, 0);
    int total = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (!alive[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
        std::vector<Vertex> verts{s};
        seen[static_cast<std::size_t>(s)] = 1;
        std::size_t edge_ends = 0;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (Vertex w : g.neighbors(verts[i])) {
                if (!alive[static_cast<std::size_t>(w)]) continue;
                ++edge_ends;
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    verts.push_back(w);
                }
            }
        }
        const std::size_t edges = edge_ends / 2;
        if (edges + 1 == verts.size()) {
            total += tree_matching(g, alive, s, Edge(-1, -2));
        } else if (edges == verts.size()) {
            const auto cycle = component_cycle(g, alive, verts);
            // every matching misses some cycle edge, so the best over single deletions is exact
            int best = 0;
            for (std::size_t i = 0; i < cycle.size(); ++i)
                for (Vertex w : g.neighbors(cycle[i]))
                    if (w > cycle[i] && std::find(cycle.begin(), cycle.end(), w) != cycle.end())
                        best = std::max(best, tree_matching(g, alive, s, Edge(cycle[i], w)));
            total += best;
        } else {
            if (static_cast<int>(edges) > matching_brute_force_cap())
                throw CapExceeded("matching: component with " + std::to_string(edges) +
                                  " edges is neither a tree nor unicyclic and exceeds the brute-force cap of " +
                                  std::to_string(matching_brute_force_cap()));
            std::sort(verts.begin(), verts.end());
            total += brute_component(g, alive, verts);
        }
    }
    return total;
}

}  // namespace

int matching_number(const Graph& g) { return matching_number_masked(g, Mask(static_cast<std::size_t>(g.order()), 1)); }

Matching maximum_matching(const Graph& g) {
    Mask alive(static_cast<std::size_t>(g.order()), 1);
    int need = matching_number_masked(g, alive);
    std::vector<Edge> chosen;
    for (const Edge& e : g.edges()) {
        if (need == 0) break;
        if (!alive[static_cast<std::size_t>(e.u)] || !alive[static_cast<std::size_t>(e.v)]) continue;
        alive[static_cast<std::size_t>(e.u)] = alive[static_cast<std::size_t>(e.v)] = 0;
        if (1 + matching_number_masked(g, alive) == need) {
            chosen.push_back(e);
            --need;
        } else {
            alive[static_cast<std::size_t>(e.u)] = alive[static_cast<std::size_t>(e.v)] = 1;
        }
    }
    return Matching(g, chosen);
}

std::optional<Path> has_augmenting_path(const Graph& g, const Matching& m) {
    if (m.host_order() != g.order()) throw std::invalid_argument("matching belongs to a different graph");
    for (const Edge& e : m.edges())
        if (!g.adjacent(e.u, e.v)) throw std::invalid_argument("matching is not valid in this graph");

    const auto n = static_cast<std::size_t>(g.order());
    std::vector<char> on_path(n, 0);
    std::vector<Vertex> path;
    // Extend an alternating path whose last edge was a matching edge (or which is just the start).
    std::function<bool(Vertex)> extend = [&](Vertex v) -> bool {
        for (Vertex w : g.neighbors(v)) {
            if (on_path[static_cast<std::size_t>(w)] || m.mate(v) == w) continue;
            // non-matching edge v-w
            if (!m.is_saturated(w)) {
                path.push_back(w);
                return true;
            }
            const Vertex x = *m.mate(w);
            if (on_path[static_cast<std::size_t>(x)]) continue;
            on_path[static_cast<std::size_t>(w)] = on_path[static_cast<std::size_t>(x)] = 1;
            path.push_back(w);
            path.push_back(x);
            if (extend(x)) return true;
            path.pop_back();
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = on_path[static_cast<std::size_t>(x)] = 0;
        }
        return false;
    };
    for (Vertex s = 0; s < g.order(); ++s) {
        if (m.is_saturated(s)) continue;
        path.assign(1, s);
        on_path[static_cast<std::size_t>(s)] = 1;
        if (extend(s)) return Path{path};
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    return std::nullopt;
}

namespace {

// 0, 1 or 2 (meaning "at least two") perfect matchings of a graph with at most
// the brute-force cap of edges.
int count_perfect_brute(const Graph& g, int limit) {
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    std::function<int()> rec = [&]() -> int {
        Vertex v = 0;
        while (v < g.order() && used[static_cast<std::size_t>(v)]) ++v;
        if (v == g.order()) return 1;
        used[static_cast<std::size_t>(v)] = 1;
        int count = 0;
        for (Vertex w : g.neighbors(v)) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            count += rec();
            used[static_cast<std::size_t>(w)] = 0;
            if (count >= limit) break;
        }
        used[static_cast<std::size_t>(v)] = 0;
        return std::min(count, limit);
    };
    return rec();
}

int has_perfect(const Graph& forest) { return 2 * matching_number(forest) == forest.order() ? 1 : 0; }

int count_perfect_component(const Graph& c) {
    if (c.order() % 2 != 0) return 0;
    const Shape shape = classify_shape(c);
    if (shape.kind == ShapeKind::Tree) return has_perfect(c);
    if (shape.kind == ShapeKind::Unicyclic) {
        // split on one cycle edge: perfect matchings avoiding it, plus those using it
        const Edge e = shape.cycle->edges().front();
        const Vertex ends[] = {e.u, e.v};
        return has_perfect(c.without_edge(e)) + has_perfect(delete_vertices(c, ends).graph);
    }
    if (static_cast<int>(c.size()) > matching_brute_force_cap())
        throw CapExceeded("perfect matching count: " + std::to_string(c.size()) + " edges exceeds brute-force cap");
    return count_perfect_brute(c, 2);
}

}  // namespace

PerfectMatchingCount is_unique_perfect_matching(const Graph& g) {
    PerfectMatchingCount out;
    if (g.order() % 2 != 0) return out;
    int product = 1;
    for (const auto& comp : connected_components(g)) {
        const int c = count_perfect_component(induced_subgraph(g, comp).graph);
        if (c == 0) return out;
        product = std::min(2, product * c);
    }
    if (product >= 2) {
        out.kind = PerfectMatchingCount::Kind::Multiple;
        return out;
    }
    out.kind = PerfectMatchingCount::Kind::Unique;
    out.matching = maximum_matching(g);
    return out;
}

}  // namespace skewrank
