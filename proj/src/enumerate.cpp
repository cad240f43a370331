#include "skewrank/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "skewrank/error.hpp"

namespace skewrank {

std::string to_string(Family f) {
    switch (f) {
        case Family::Trees: return "trees";
        case Family::Unicyclic: return "unicyclic";
        case Family::Labeled: return "labeled";
    }
    return "?";
}

Family parse_family(const std::string& name) {
    if (name == "trees" || name == "tree") return Family::Trees;
    if (name == "unicyclic") return Family::Unicyclic;
    if (name == "labeled") return Family::Labeled;
    throw std::invalid_argument("unknown family '" + name + "' (expected trees, unicyclic or labeled)");
}

int family_min_order(Family f) { return f == Family::Unicyclic ? 3 : 1; }

int family_max_order(Family f) {
    switch (f) {
        case Family::Trees: return kMaxTreeOrder;
        case Family::Unicyclic: return kMaxUnicyclicOrder;
        case Family::Labeled: return kMaxLabeledOrder;
    }
    return 0;
}

namespace {

// AHU code of the subtree at v, not entering `blocked` vertices.
std::string rooted_code(const Graph& g, Vertex v, Vertex parent, const std::vector<char>& blocked) {
    std::vector<std::string> kids;
    for (Vertex w : g.neighbors(v))
        if (w != parent && !blocked[static_cast<std::size_t>(w)]) kids.push_back(rooted_code(g, w, v, blocked));
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    return out + ")";
}

std::vector<Vertex> tree_centers(const Graph& t) {
    const int n = t.order();
    if (n <= 2) {
        std::vector<Vertex> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = t.degree(v);
        if (t.degree(v) <= 1) layer.push_back(v);
    }
    int left = n;
    while (left > 2) {
        left -= static_cast<int>(layer.size());
        std::vector<Vertex> next;
        for (Vertex v : layer)
            for (Vertex w : t.neighbors(v))
                if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string tree_code(const Graph& t) {
    const std::vector<char> none(static_cast<std::size_t>(t.order()), 0);
    std::string best;
    for (Vertex c : tree_centers(t)) {
        std::string code = rooted_code(t, c, -1, none);
        if (best.empty() || code < best) best = code;
    }
    return "T" + best;
}

std::string unicyclic_code(const Graph& u, const CycleInfo& cycle) {
    std::vector<char> on(static_cast<std::size_t>(u.order()), 0);
    for (Vertex v : cycle.vertices) on[static_cast<std::size_t>(v)] = 1;
    std::vector<std::string> ring;
    for (Vertex v : cycle.vertices) {
        // root v, blocked from the rest of the cycle
        std::vector<std::string> kids;
        for (Vertex w : u.neighbors(v))
            if (!on[static_cast<std::size_t>(w)]) kids.push_back(rooted_code(u, w, v, on));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        ring.push_back(s + ")");
    }
    const std::size_t k = ring.size();
    std::string best;
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t start = 0; start < k; ++start) {
            std::string s;
            for (std::size_t step = 0; step < k; ++step) {
                const std::size_t i = dir == 0 ? (start + step) % k : (start + k - step) % k;
                s += ring[i];
                s += '.';
            }
            if (best.empty() || s < best) best = s;
        }
    }
    return "U" + best;
}

std::string adjacency_string(const Graph& g, const std::vector<Vertex>& order) {
    std::string s;
    const int n = g.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            s += g.adjacent(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]) ? '1' : '0';
    return s;
}

}  // namespace

std::string canonical_form_bruteforce(const Graph& g) {
    const int n = g.order();
    if (n > kMaxBruteCanonicalOrder)
        throw CapExceeded("canonical_form_bruteforce: order " + std::to_string(n) + " exceeds 9");
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    // degree pruning: only orders listing degrees non-increasingly
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    std::string best;
    std::vector<Vertex> perm = order;
    // permute within equal-degree blocks
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < perm.size();) {
        std::size_t j = i;
        while (j < perm.size() && g.degree(perm[j]) == g.degree(perm[i])) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    auto go = [&](auto&& self, std::size_t b) -> void {
        if (b == blocks.size()) {
            std::string s = adjacency_string(g, perm);
            if (best.empty() || s > best) best = s;
            return;
        }
        auto [lo, hi] = blocks[b];
        std::sort(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi));
        do {
            self(self, b + 1);
        } while (std::next_permutation(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi)));
    };
    go(go, 0);
    return "B" + std::to_string(n) + ":" + best;
}

std::string canonical_form(const Graph& g) {
    const Shape shape = classify_shape(g);
    if (shape.kind == ShapeKind::Tree) return tree_code(g);
    if (shape.kind == ShapeKind::Unicyclic) return unicyclic_code(g, *shape.cycle);
    return canonical_form_bruteforce(g);
}

std::uint64_t automorphism_count(const Graph& g) {
    const int n = g.order();
    if (n > kMaxBruteCanonicalOrder) throw CapExceeded("automorphism_count: order exceeds 9");
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (const Edge& e : g.edges())
            if (!g.adjacent(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)])) {
                ok = false;
                break;
            }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

namespace {

std::vector<Graph> grow_by_leaf(const std::vector<Graph>& smaller, std::map<std::string, Graph>& classes) {
    for (const Graph& g : smaller) {
        for (Vertex v = 0; v < g.order(); ++v) {
            std::vector<Edge> es = g.edges();
            es.emplace_back(v, g.order());
            Graph h(g.order() + 1, es);
            classes.try_emplace(canonical_form(h), std::move(h));
        }
    }
    std::vector<Graph> out;
    for (auto& [code, g] : classes) out.push_back(std::move(g));
    return out;
}

}  // namespace

std::vector<Graph> enumerate_family(Family f, int n) {
    if (n > family_max_order(f))
        throw CapExceeded("enumerate_family: order " + std::to_string(n) + " exceeds the " + to_string(f) + " cap");
    if (n < family_min_order(f)) return {};
    if (f == Family::Labeled) {
        std::vector<Edge> slots;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
        std::vector<Graph> out;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
            std::vector<Edge> es;
            for (std::size_t k = 0; k < slots.size(); ++k)
                if (mask >> k & 1u) es.push_back(slots[k]);
            out.emplace_back(n, es);
        }
        return out;
    }
    std::map<std::string, Graph> classes;
    if (f == Family::Trees) {
        if (n == 1) return {Graph(1, std::vector<Edge>{})};
        return grow_by_leaf(enumerate_family(f, n - 1), classes);
    }
    std::vector<Edge> cycle;
    for (int i = 0; i < n; ++i) cycle.emplace_back(i, (i + 1) % n);
    Graph c(n, cycle);
    classes.try_emplace(canonical_form(c), c);
    if (n == 3) return {c};
    return grow_by_leaf(enumerate_family(f, n - 1), classes);
}

}  // namespace skewrank
