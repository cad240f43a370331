#include "skewrank/oracle.hpp"

#include "skewrank/caps.hpp"
#include "skewrank/error.hpp"
#include "skewrank/witness.hpp"

namespace skewrank {

namespace {

void check_edge_cap(const Graph& g, int default_cap, const char* what) {
    const int cap = oracle_edge_cap(default_cap);
    if (static_cast<int>(g.size()) > cap)
        throw CapExceeded(std::string(what) + ": " + std::to_string(g.size()) + " edges exceeds cap " +
                          std::to_string(cap));
}

}  // namespace

int brute_matching(const Graph& g) {
    check_edge_cap(g, kBruteMatchingEdgeCap, "brute_matching");
    const auto& es = g.edges();
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    int best = 0;
    // include/exclude each edge; prune when even taking every remaining edge cannot win
    auto go = [&](auto&& self, std::size_t k, int taken) -> void {
        if (taken > best) best = taken;
        if (k == es.size() || taken + static_cast<int>(es.size() - k) <= best) return;
        const Edge& e = es[k];
        if (!used[static_cast<std::size_t>(e.u)] && !used[static_cast<std::size_t>(e.v)]) {
            used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 1;
            self(self, k + 1, taken + 1);
            used[static_cast<std::size_t>(e.u)] = used[static_cast<std::size_t>(e.v)] = 0;
        }
        self(self, k + 1, taken);
    };
    go(go, 0, 0);
    return best;
}

int brute_min_skew_rank(const Graph& g, std::span<const int> entry_set, std::optional<int> lower_bound) {
    check_edge_cap(g, kBruteRankEdgeCap, "brute_min_skew_rank");
    if (g.size() == 0) return 0;
    int best = g.order() + 1;
    for_each_signed_assignment(g, entry_set, [&](const std::vector<std::int64_t>& w) {
        const int r = exact_rank(SkewIntMatrix::from_edge_weights(g, w));
        if (r < best) best = r;
        return lower_bound && best <= *lower_bound;
    });
    return best;
}

unsigned skew_forcing_closure(const Graph& g, unsigned colored) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < g.order(); ++v) {
            int uncolored = 0;
            Vertex target = -1;
            for (Vertex w : g.neighbors(v)) {
                if (!(colored >> w & 1u)) {
                    ++uncolored;
                    target = w;
                }
            }
            if (uncolored == 1) {
                colored |= 1u << target;
                changed = true;
            }
        }
    }
    return colored;
}

int skew_zero_forcing_number(const Graph& g) {
    const int n = g.order();
    if (n > kZeroForcingOrderCap)
        throw CapExceeded("skew_zero_forcing_number: order " + std::to_string(n) + " exceeds 12");
    const unsigned all = n == 0 ? 0u : (1u << n) - 1u;
    for (int size = 0; size <= n; ++size) {
        // Gosper's hack over the size-element subsets
        if (size == 0) {
            if (skew_forcing_closure(g, 0) == all) return 0;
            continue;
        }
        unsigned s = (1u << size) - 1u;
        while (s <= all) {
            if (skew_forcing_closure(g, s) == all) return size;
            const unsigned c = s & -s, r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return n;
}

}  // namespace skewrank
