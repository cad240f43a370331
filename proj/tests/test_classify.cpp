#include <doctest.h>

#include "skewrank/builders.hpp"
#include "skewrank/classify.hpp"
#include "skewrank/enumerate.hpp"
#include "skewrank/error.hpp"
#include "skewrank/skew_rank.hpp"
#include "support.hpp"

using namespace skewrank;

TEST_CASE("centipede recognition") {
    const Graph leg2 = centipede(6, {{2, 1}});
    const auto c = recognize_centipede(leg2, Path{{0, 1, 2, 3, 4, 5}});
    REQUIRE(c);
    CHECK(c->joints() == std::vector<int>{2});
    CHECK(c->regular());
    CHECK(c->legs.at(2) == std::vector<Vertex>{6});

    // P_5 with a path of length 2 hanging from v_3
    const Graph deep = fixtures::with_extra(path_graph(5), 2, {{2, 5}, {5, 6}});
    CHECK_FALSE(recognize_centipede(deep, Path{{0, 1, 2, 3, 4}}));
    CHECK(diameter(deep) == 4);

    const auto irr = recognize_centipede(centipede(6, {{3, 1}, {4, 1}}), Path{{0, 1, 2, 3, 4, 5}});
    REQUIRE(irr);
    CHECK(irr->joints() == std::vector<int>{3, 4});
    CHECK_FALSE(irr->regular());

    // a leaf on an end of the spine is not a leg
    CHECK_FALSE(recognize_centipede(path_graph(5), Path{{1, 2, 3, 4}}));
    CHECK_THROWS_AS(recognize_centipede(path_graph(5), Path{{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(recognize_centipede(cycle_graph(4), Path{{0, 1}}), std::invalid_argument);
}

TEST_CASE("tree theorem examples") {
    const ClassificationVerdict ok = tree_classification(centipede(5, {{2, 1}}));
    CHECK(ok.holds);
    CHECK(ok.clause == "tree.odd");
    CHECK(ok.explanation == "odd case: regular centipede, joints even-indexed");
    REQUIRE(ok.centipede);
    CHECK(ok.n == 5);

    const ClassificationVerdict bad = tree_classification(centipede(5, {{3, 1}}));
    CHECK_FALSE(bad.holds);
    CHECK(bad.clause == "tree.odd.joint-parity");
    CHECK(min_skew_rank(centipede(5, {{3, 1}})).value == 6);

    const ClassificationVerdict even = tree_classification(centipede(6, {{2, 1}, {3, 1}}));
    CHECK(even.holds);
    CHECK(even.clause == "tree.even");

    const ClassificationVerdict pair = tree_classification(centipede(8, {{3, 1}, {6, 1}}));
    CHECK_FALSE(pair.holds);
    CHECK(pair.clause == "tree.even.joint-pair");

    CHECK_FALSE(tree_classification(centipede(7, {{2, 1}, {3, 1}})).holds);
    CHECK(tree_classification(path_graph(2)).holds);
    CHECK_THROWS_AS(tree_classification(cycle_graph(4)), std::invalid_argument);
}

TEST_CASE("unicyclic theorem examples") {
    const ClassificationVerdict w = unicyclic_classification(fixtures::p5_with_chord_vertex());
    CHECK(w.holds);
    CHECK(w.clause == "odd");
    CHECK(w.cycle_on_path.size() == 3);
    CHECK(w.cycle_off_path.size() == 1);

    const ClassificationVerdict c3 = unicyclic_classification(cycle_graph(3));
    CHECK(c3.holds);
    CHECK(c3.clause == "small-case");

    const Graph c6leaf = dandelion(6, {{1, 1}});
    CHECK(unicyclic_classification(c6leaf).holds == reaches_path_bound(c6leaf));
    CHECK_THROWS_AS(unicyclic_classification(path_graph(4)), std::invalid_argument);
}

TEST_CASE("verdict shape") {
    for (int n = 2; n <= 9; ++n)
        for (const Graph& t : enumerate_family(Family::Trees, n)) {
            const ClassificationVerdict v = tree_classification(t);
            CHECK_FALSE(v.clause.empty());
            if (v.holds) {
                CHECK(v.spine);
                CHECK(v.centipede);
            }
        }
    for (int n = 3; n <= 9; ++n)
        for (const Graph& u : enumerate_family(Family::Unicyclic, n)) {
            const ClassificationVerdict v = unicyclic_classification(u);
            CHECK_FALSE(v.clause.empty());
            if (v.holds) CHECK(v.spine);
        }
}

TEST_CASE("orientation symmetry of the predicates") {
    for (int n = 2; n <= 9; ++n)
        for (const Graph& t : enumerate_family(Family::Trees, n))
            for (const Path& p : diametrical_paths(t))
                CHECK(tree_predicate(t, p).holds == tree_predicate(t, p.reversed()).holds);
}

TEST_CASE("quantifier readings") {
    // holds on one oriented diametrical path but not on another
    const Graph g = parse_graph6("Fl_I?");
    CHECK_FALSE(reaches_path_bound(g));
    CHECK(unicyclic_theorem(g, Quantifier::Existential).holds);
    CHECK_FALSE(unicyclic_theorem(g, Quantifier::Universal).holds);
    CHECK_FALSE(unicyclic_classification(g).holds);
}

TEST_CASE("clause 6f as printed rejects a positive instance") {
    const Graph g = parse_graph6("GhEK?C");
    CHECK(reaches_path_bound(g));
    CHECK(unicyclic_theorem(g).holds);
    TheoremReadings literal;
    literal.clause_6f_literal = true;
    const ClassificationVerdict v = unicyclic_theorem(g, Quantifier::Universal, literal);
    CHECK_FALSE(v.holds);
    CHECK(v.clause == "6f");
}

TEST_CASE("necessary conditions on positive instances") {
    for (int n = 5; n <= 10; ++n)
        for (const Graph& u : enumerate_family(Family::Unicyclic, n)) {
            if (!reaches_path_bound(u)) continue;
            const int k = unique_cycle(u).length();
            CHECK((k == 3 || k == 4 || k == 6));
            for (const Path& p : diametrical_paths(u)) CHECK(necessary_conditions_violation(u, p).empty());
        }
}

TEST_CASE("pineapple builder") {
    const Graph u = pineapple_graph(1, 6, 3, 3);
    CHECK(u.order() == 8);
    CHECK(u.adjacent(2, 6));
    CHECK(u.adjacent(6, 3));
    CHECK(u.adjacent(2, 7));
    CHECK(min_skew_rank(u).value > smr_path(6));

    const Graph u4 = pineapple_graph(4, 8, 2, 4);
    CHECK(min_skew_rank(u4).value == 10);  // frozen, tests/data/examples.txt

    CHECK(pineapple_constraint_violation(1, 6, 2, 3) == "variant 1: j must be odd");
    CHECK_THROWS_WITH_AS(pineapple_graph(1, 6, 2, 3), doctest::Contains("j must be odd"), std::invalid_argument);
    CHECK_THROWS_AS(pineapple_graph(1, 7, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(pineapple_graph(5, 6, 3, 3), std::invalid_argument);
}

TEST_CASE("pineapples exceed the path value") {
    int built = 0;
    for (int variant = 1; variant <= 4; ++variant)
        for (int n = 6; n <= 10; n += 2)
            for (int j = 1; j <= n; ++j)
                for (int i = 1; i <= n; ++i) {
                    if (!pineapple_constraint_violation(variant, n, j, i).empty()) {
                        CHECK_THROWS_AS(pineapple_graph(variant, n, j, i), std::invalid_argument);
                        continue;
                    }
                    const Graph u = pineapple_graph(variant, n, j, i);
                    CHECK(is_connected_unicyclic(u));
                    CHECK(min_skew_rank(u).value > smr_path(n));
                    ++built;
                }
    CHECK(built > 0);
}

TEST_CASE("builders") {
    CHECK(path_graph(4) == Graph(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(cycle_graph(3) == Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
    const Graph sun = n_sun(3);
    CHECK(sun.order() == 6);
    CHECK(min_skew_rank(sun).value == 6);
    CHECK(centipede(5, {{2, 1}}) == Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}}));
    CHECK(dandelion(4, {{1, 2}, {3, 1}}).order() == 7);
    CHECK_THROWS_AS(centipede(5, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(centipede(5, {{5, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(dandelion(4, {}), std::invalid_argument);
    CHECK_THROWS_AS(dandelion(4, {{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(path_graph(0), std::invalid_argument);
}
