#include "skewrank/builders.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace skewrank {

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: n must be positive");
    std::vector<Edge> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be at least 3");
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph(n, es);
}

Graph star_graph(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star_graph: negative leaf count");
    std::vector<Edge> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph(leaves + 1, es);
}

namespace {

Graph with_leaves(int base_order, std::vector<Edge> es, const std::map<int, int>& counts) {
    int next = base_order;
    for (const auto& [pos, count] : counts)
        for (int c = 0; c < count; ++c) es.emplace_back(pos - 1, next++);
    return Graph(next, es);
}

}  // namespace

Graph centipede(int n, const std::map<int, int>& legs) {
    for (const auto& [pos, count] : legs) {
        if (pos < 2 || pos > n - 1)
            throw std::invalid_argument("centipede: joint v_" + std::to_string(pos) + " is not an interior spine vertex");
        if (count < 1) throw std::invalid_argument("centipede: a joint needs at least one leg");
    }
    return with_leaves(n, path_graph(n).edges(), legs);
}

Graph n_sun(int n) {
    std::map<int, int> all;
    for (int i = 1; i <= n; ++i) all[i] = 1;
    return dandelion(n, all);
}

Graph dandelion(int n, const std::map<int, int>& attachments) {
    if (attachments.empty()) throw std::invalid_argument("dandelion: at least one cycle vertex needs leaves");
    for (const auto& [pos, count] : attachments) {
        if (pos < 1 || pos > n) throw std::invalid_argument("dandelion: cycle index " + std::to_string(pos) + " out of range");
        if (count < 1) throw std::invalid_argument("dandelion: p_i must be at least 1");
    }
    return with_leaves(n, cycle_graph(n).edges(), attachments);
}

std::string pineapple_constraint_violation(int variant, int n, int j, int i) {
    if (n < 6 || n % 2 != 0) return "n must be even and at least 6";
    const bool j_odd = j % 2 != 0, i_odd = i % 2 != 0;
    switch (variant) {
        case 1:
            if (!j_odd) return "variant 1: j must be odd";
            if (j < 3 || j > n - 1) return "variant 1: 3 <= j <= n-1";
            if (!i_odd) return "variant 1: i must be odd";
            if (i < 3 || i > j) return "variant 1: 3 <= i <= j";
            return "";
        case 2:
            if (!j_odd) return "variant 2: j must be odd";
            if (j < 1 || j > n - 3) return "variant 2: 1 <= j <= n-3";
            if (i_odd) return "variant 2: i must be even";
            if (i < j + 1 || i > n - 2) return "variant 2: j+1 <= i <= n-2";
            return "";
        case 3:
            if (j_odd) return "variant 3: j must be even";
            if (j < 4 || j > n - 2) return "variant 3: 4 <= j <= n-2";
            if (!i_odd) return "variant 3: i must be odd";
            if (i < 3 || i > j - 1) return "variant 3: 3 <= i <= j-1";
            return "";
        case 4:
            if (j_odd) return "variant 4: j must be even";
            if (j < 2 || j > n - 4) return "variant 4: 2 <= j <= n-4";
            if (i_odd) return "variant 4: i must be even";
            if (i < j + 2 || i > n - 2) return "variant 4: j+2 <= i <= n-2";
            return "";
        default: return "variant must be 1, 2, 3 or 4";
    }
}

Graph pineapple_graph(int variant, int n, int j, int i) {
    if (auto why = pineapple_constraint_violation(variant, n, j, i); !why.empty())
        throw std::invalid_argument("pineapple_graph: " + why);
    std::vector<Edge> es = path_graph(n).edges();
    const Vertex w = n, z = n + 1;
    es.emplace_back(j - 1, w);
    es.emplace_back(w, j);
    es.emplace_back(i - 1, z);
    return Graph(n + 2, es);
}

}  // namespace skewrank
