#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "skewrank/builders.hpp"
#include "skewrank/graph.hpp"

namespace fixtures {

using skewrank::Edge;
using skewrank::Graph;
using skewrank::Vertex;

inline Graph with_extra(const Graph& g, int extra_vertices, std::vector<Edge> extra_edges) {
    std::vector<Edge> es = g.edges();
    es.insert(es.end(), extra_edges.begin(), extra_edges.end());
    return Graph(g.order() + extra_vertices, es);
}

inline Graph star(int leaves) { return skewrank::star_graph(leaves); }

// C_k plus the path c_0 - a - b - ... of the given length
inline Graph cycle_with_tail(int k, int length) {
    std::vector<Edge> es;
    Vertex prev = 0;
    for (int t = 0; t < length; ++t) {
        es.emplace_back(prev, k + t);
        prev = k + t;
    }
    return with_extra(skewrank::cycle_graph(k), length, es);
}

// P_5 plus w adjacent to v_2 and v_4
inline Graph p5_with_chord_vertex() { return with_extra(skewrank::path_graph(5), 1, {{1, 5}, {5, 3}}); }

// two triangles sharing vertex 2
inline Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

inline Graph petersen() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                      {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) es.emplace_back(u, v);
    return Graph(n, es);
}

// Pruefer-free random tree: attach vertex v to a uniform earlier vertex.
inline Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<Edge> es;
    for (int v = 1; v < n; ++v) es.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    return Graph(n, es);
}

// Plain graph6 decoder for n < 63, written from the format description.
inline std::vector<std::pair<int, int>> decode_graph6(const std::string& s) {
    const int n = s[0] - 63;
    std::vector<int> bits;
    for (std::size_t i = 1; i < s.size(); ++i)
        for (int b = 5; b >= 0; --b) bits.push_back(((s[i] - 63) >> b) & 1);
    std::vector<std::pair<int, int>> out;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if (bits.at(k)) out.emplace_back(i, j);
    return out;
}

// a12 a34 - a13 a24 + a14 a23 for a 4x4 skew matrix given row-major
inline long long pfaffian4(const long long a[4][4]) {
    return a[0][1] * a[2][3] - a[0][2] * a[1][3] + a[0][3] * a[1][2];
}

}  // namespace fixtures
