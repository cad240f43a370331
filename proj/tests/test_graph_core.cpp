#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "skewrank/enumerate.hpp"
#include "skewrank/error.hpp"
#include "skewrank/graph.hpp"
#include "support.hpp"

using namespace skewrank;

TEST_CASE("graph rejects loops, duplicates and bad endpoints") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), GraphError);
    try {
        Graph(2, {{1, 1}});
    } catch (const GraphError& e) {
        CHECK(e.kind() == GraphError::Kind::Loop);
    }
}

TEST_CASE("edge list parsing") {
    const Graph p3 = parse_graph("3\n0 1\n1 2", GraphFormat::EdgeList);
    CHECK(p3 == path_graph(3));

    CHECK(parse_edge_list("# comment\r\n4\r\n\r\n0 1 # trailing\n2 3\n") == Graph(4, {{0, 1}, {2, 3}}));

    auto kind_of = [](const char* text) {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.kind();
        }
        FAIL("no error for " << text);
        return ParseError::Kind::BadGraph6;
    };
    CHECK(kind_of("2\n0 0") == ParseError::Kind::Loop);
    CHECK(kind_of("3\n0 1\n1 0") == ParseError::Kind::DuplicateEdge);
    CHECK(kind_of("3\n0 3") == ParseError::Kind::VertexOutOfRange);
    CHECK(kind_of("x\n0 1") == ParseError::Kind::MalformedHeader);
    CHECK(kind_of("3\n0 1 2") == ParseError::Kind::MalformedLine);
    CHECK(kind_of("") == ParseError::Kind::MalformedHeader);
}

TEST_CASE("graph6 known string and malformed input") {
    // K_{1,4} with centre 4, as decoded by networkx (tests/data/examples.txt)
    const Graph d = parse_graph6("D?{");
    CHECK(d == Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
    CHECK(to_graph6(d) == "D?{");
    CHECK(parse_graph6(">>graph6<<D?{\n") == d);

    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);
    CHECK_THROWS_AS(parse_graph6("D? {"), ParseError);
    CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);  // padding bit set
}

TEST_CASE("graph6 agrees with an independent decoder on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 14;
        const Graph g = fixtures::random_graph(n, 0.4, rng);
        const std::string s = to_graph6(g);
        std::vector<Edge> es;
        for (auto [a, b] : fixtures::decode_graph6(s)) es.emplace_back(a, b);
        CHECK(Graph(n, es) == g);
        CHECK(to_graph6(parse_graph6(s)) == s);
    }
}

TEST_CASE("long-form graph6 header") {
    const Graph g = path_graph(70);
    const std::string s = to_graph6(g);
    CHECK(s[0] == '~');
    CHECK(parse_graph6(s) == g);
}

TEST_CASE("round trip over enumerated graphs") {
    for (Family f : {Family::Trees, Family::Unicyclic})
        for (int n = family_min_order(f); n <= 9; ++n)
            for (const Graph& g : enumerate_family(f, n)) {
                CHECK(parse_graph6(to_graph6(g)) == g);
                CHECK(parse_edge_list(to_edge_list(g)) == g);
            }
}

TEST_CASE("format guessing") {
    CHECK(guess_format("D?{\n") == GraphFormat::Graph6);
    CHECK(guess_format("3\n0 1\n") == GraphFormat::EdgeList);
    CHECK(guess_format("1\n") == GraphFormat::EdgeList);
}

TEST_CASE("classify_shape") {
    CHECK(classify_shape(path_graph(4)).kind == ShapeKind::Tree);
    const Shape c5 = classify_shape(cycle_graph(5));
    REQUIRE(c5.kind == ShapeKind::Unicyclic);
    CHECK(c5.cycle->length() == 5);
    CHECK(classify_shape(disjoint_union(cycle_graph(4), Graph(1, {}))).kind == ShapeKind::Other);
    CHECK(classify_shape(disjoint_union(path_graph(2), path_graph(3))).kind == ShapeKind::Forest);
    CHECK(classify_shape(fixtures::bowtie()).kind == ShapeKind::Other);
    CHECK(classify_shape(Graph(1, {})).kind == ShapeKind::Tree);
}

TEST_CASE("unique cycle is traversal ordered") {
    const Graph g = fixtures::cycle_with_tail(5, 2);
    const CycleInfo c = unique_cycle(g);
    REQUIRE(c.length() == 5);
    for (int i = 0; i < 5; ++i) CHECK(g.adjacent(c.vertices[i], c.vertices[(i + 1) % 5]));
    CHECK_THROWS_AS(unique_cycle(path_graph(4)), UnsupportedShape);
}

TEST_CASE("distances") {
    CHECK(distances_from(cycle_graph(6), 0) == std::vector<int>{0, 1, 2, 3, 2, 1});
    CHECK(distances_from(path_graph(5), 0) == std::vector<int>{0, 1, 2, 3, 4});
    const auto d = distances_from(disjoint_union(path_graph(2), path_graph(1)), 0);
    CHECK(d[2] == kUnreachable);
    CHECK_THROWS(distances_from(path_graph(3), 3));
}

namespace {

// shortest simple path length by exhaustive DFS
int brute_distance(const Graph& g, int s, int t) {
    int best = kUnreachable;
    std::vector<bool> on(g.order(), false);
    std::function<void(int, int)> go = [&](int v, int len) {
        if (v == t) {
            best = std::min(best, len);
            return;
        }
        on[v] = true;
        for (int w : g.neighbors(v))
            if (!on[w]) go(w, len + 1);
        on[v] = false;
    };
    go(s, 0);
    return best;
}

}  // namespace

TEST_CASE("distances agree with simple-path search on random trees and unicyclic graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial % 7;
        Graph g = fixtures::random_tree(n, rng);
        if (trial % 2 && n >= 3) {
            for (int u = 0; u < n && g.size() < static_cast<std::size_t>(n); ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!g.adjacent(u, v)) {
                        g = g.with_edge({u, v});
                        break;
                    }
        }
        for (int s = 0; s < n; ++s) {
            const auto d = distances_from(g, s);
            for (int t = 0; t < n; ++t) CHECK(d[t] == brute_distance(g, s, t));
        }
    }
}

TEST_CASE("diameter and diametrical paths") {
    CHECK(diameter(path_graph(7)) == 6);
    CHECK(diametrical_paths(path_graph(7)).size() == 1);
    // counts from networkx all_shortest_paths, deduplicated by reversal
    CHECK(diameter(cycle_graph(6)) == 3);
    CHECK(diametrical_paths(cycle_graph(6)).size() == 6);
    CHECK(diameter(star_graph(4)) == 2);
    CHECK(diametrical_paths(star_graph(4)).size() == 6);
    CHECK(diameter(Graph(1, {})) == 0);
    CHECK_THROWS_AS(diameter(Graph(2, {})), GraphError);
}

TEST_CASE("diametrical paths are induced shortest paths and diameter is the max eccentricity") {
    for (Family f : {Family::Trees, Family::Unicyclic})
        for (int n = family_min_order(f); n <= 8; ++n)
            for (const Graph& g : enumerate_family(f, n)) {
                const int d = diameter(g);
                int ecc = 0;
                for (int v = 0; v < g.order(); ++v) {
                    const auto dist = distances_from(g, v);
                    ecc = std::max(ecc, *std::max_element(dist.begin(), dist.end()));
                }
                CHECK(d == ecc);
                for (const Path& p : diametrical_paths(g)) {
                    CHECK(p.length() == d);
                    CHECK(is_induced_path(g, p));
                }
            }
}

TEST_CASE("vertex deletion and induction") {
    const Relabeled r = delete_vertices(star_graph(3), std::vector<Vertex>{0});
    CHECK(r.graph == Graph(3, {}));
    CHECK(r.from_original[0] == -1);
    CHECK(r.to_original == std::vector<Vertex>{1, 2, 3});

    const Relabeled h = induced_subgraph(cycle_graph(5), std::vector<Vertex>{1, 2, 3});
    CHECK(h.graph == path_graph(3));
    CHECK(h.to_original == std::vector<Vertex>{1, 2, 3});

    CHECK(delete_vertices(path_graph(4), std::vector<Vertex>{3}).graph == path_graph(3));
    CHECK(delete_vertices(path_graph(4), std::vector<Vertex>{0}).graph == path_graph(3));
    CHECK_THROWS(delete_vertices(path_graph(4), std::vector<Vertex>{4}));
}

TEST_CASE("cut vertices and components") {
    CHECK(is_cut_vertex(path_graph(3), 1));
    CHECK_FALSE(is_cut_vertex(path_graph(3), 0));
    CHECK(is_cut_vertex(fixtures::bowtie(), 2));
    CHECK_FALSE(is_cut_vertex(cycle_graph(5), 2));
    const auto comps = connected_components(disjoint_union(cycle_graph(3), path_graph(2)));
    CHECK(comps == std::vector<std::vector<Vertex>>{{0, 1, 2}, {3, 4}});
}

TEST_CASE("path helpers") {
    const Path p{{3, 1, 4}};
    CHECK(p.index_of(4) == 3);
    CHECK(p.index_of(9) == 0);
    CHECK(p.reversed().vertices == std::vector<Vertex>{4, 1, 3});
    CHECK_FALSE(is_path(path_graph(5), p));
    CHECK(is_path(cycle_graph(4), Path{{0, 1, 2, 3}}));
    CHECK_FALSE(is_induced_path(cycle_graph(4), Path{{0, 1, 2, 3}}));
}
