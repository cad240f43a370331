#include <doctest.h>

#include "skewrank/builders.hpp"
#include "skewrank/enumerate.hpp"
#include "skewrank/error.hpp"
#include "skewrank/matching.hpp"
#include "skewrank/oracle.hpp"
#include "skewrank/skew_rank.hpp"
#include "support.hpp"

using namespace skewrank;

// Values marked "frozen" come from tests/data/derive_examples.py.

TEST_CASE("closed forms") {
    CHECK(smr_path(6) == 6);
    CHECK(smr_path(5) == 4);
    CHECK(smr_path(1) == 0);
    CHECK_THROWS(smr_path(0));
    CHECK(smr_cycle(4) == 2);
    CHECK(smr_cycle(5) == 4);
    CHECK(smr_cycle(6) == 4);
    CHECK_THROWS(smr_cycle(2));
}

TEST_CASE("closed forms against the discrete oracle") {
    for (int n = 1; n <= 8; ++n) CHECK(smr_path(n) == brute_min_skew_rank(path_graph(n)));
    for (int n = 3; n <= 8; ++n) CHECK(smr_cycle(n) == brute_min_skew_rank(cycle_graph(n)));
}

TEST_CASE("max skew rank and trees") {
    CHECK(max_skew_rank(cycle_graph(4)) == 4);
    CHECK(max_skew_rank(path_graph(5)) == 4);
    CHECK(max_skew_rank(star_graph(3)) == 2);
    CHECK(smr_tree(path_graph(7)) == 6);
    CHECK(smr_tree(star_graph(3)) == 2);              // frozen
    CHECK(smr_tree(centipede(5, {{2, 1}})) == 4);     // frozen
    CHECK(smr_tree(disjoint_union(path_graph(3), path_graph(2))) == 4);
    CHECK_THROWS_AS(smr_tree(cycle_graph(3)), UnsupportedShape);
}

TEST_CASE("pendant stars") {
    // C_3 on 0,1,2 and the path 0 - 3 - 4
    const Graph tail = fixtures::cycle_with_tail(3, 2);
    const auto s = find_pendant_star(tail);
    REQUIRE(s);
    CHECK(s->center == 3);
    CHECK(s->leaves == std::vector<Vertex>{4});

    CHECK_FALSE(find_pendant_star(fixtures::cycle_with_tail(3, 1)));
    CHECK_FALSE(find_pendant_star(cycle_graph(6)));
    CHECK_FALSE(pendant_star_at(tail, 0));
    CHECK_THROWS_AS(find_pendant_star(path_graph(4)), UnsupportedShape);

    // a center carrying two leaves
    const Graph two = fixtures::with_extra(fixtures::cycle_with_tail(4, 1), 2, {{4, 5}, {4, 6}});
    const auto t = find_pendant_star(two);
    REQUIRE(t);
    CHECK(t->center == 4);
    CHECK(t->leaves == std::vector<Vertex>{5, 6});
}

TEST_CASE("star reduction examples") {
    const StarReductionTrace c3 = star_reduce(fixtures::cycle_with_tail(3, 2));
    CHECK(c3.steps.size() == 1);
    CHECK(c3.s == 2);
    REQUIRE(c3.terminal_is_cycle());
    CHECK(std::get<CycleInfo>(c3.terminal_form).length() == 3);
    CHECK(evaluate_trace(c3) == 4);  // frozen

    const StarReductionTrace c4 = star_reduce(fixtures::cycle_with_tail(4, 3));
    REQUIRE(c4.steps.size() == 1);
    CHECK(c4.steps[0].star.center == 5);
    CHECK(c4.steps[0].star.leaves == std::vector<Vertex>{6});
    CHECK(c4.s == 2);
    REQUIRE_FALSE(c4.terminal_is_cycle());
    const auto& d = std::get<PartialDandelion>(c4.terminal_form);
    CHECK(d.attached_count() == 1);
    CHECK(d.is_partial_sun());
    CHECK(evaluate_trace(c4) == 6);  // frozen
    CHECK(c4.terminal_to_original.size() == 5);

    const StarReductionTrace c5 = star_reduce(cycle_graph(5));
    CHECK(c5.steps.empty());
    CHECK(c5.s == 0);
    CHECK(c5.terminal_is_cycle());
}

TEST_CASE("reduction trace invariants") {
    for (int n = 3; n <= 9; ++n)
        for (const Graph& u : enumerate_family(Family::Unicyclic, n)) {
            const StarReductionTrace t = star_reduce(u);
            CHECK(t.s == 2 * static_cast<int>(t.steps.size()));
            for (const auto& step : t.steps) CHECK(is_connected_unicyclic(step.remaining));
            CHECK_FALSE(find_pendant_star(t.terminal));
            for (int trial = 0; trial < 3; ++trial)
                CHECK(evaluate_trace(star_reduce(u, random_star_chooser(31 * n + trial))) == evaluate_trace(t));
        }
}

TEST_CASE("partial dandelions") {
    const auto sun = recognize_partial_dandelion(n_sun(4));
    REQUIRE(sun);
    CHECK(sun->attached_count() == 4);
    CHECK(sun->is_sun());
    CHECK_FALSE(sun->is_partial_sun());

    const Graph two_leaves = dandelion(4, {{1, 2}});
    const auto d = recognize_partial_dandelion(two_leaves);
    REQUIRE(d);
    CHECK(d->attached_count() == 1);
    CHECK(d->attachments.begin()->second.size() == 2);
    CHECK_FALSE(d->is_sun());
    CHECK_FALSE(d->is_partial_sun());

    CHECK_FALSE(recognize_partial_dandelion(fixtures::cycle_with_tail(3, 2)));
    CHECK_FALSE(recognize_partial_dandelion(cycle_graph(5)));

    CHECK(smr_partial_dandelion(n_sun(5), *recognize_partial_dandelion(n_sun(5))) == 10);
    const Graph chord = fixtures::p5_with_chord_vertex();
    const auto cd = recognize_partial_dandelion(chord);
    REQUIRE(cd);
    CHECK(cd->attached_count() == 2);
    CHECK(smr_partial_dandelion(chord, *cd) == 4);  // frozen
    const Graph leaf = dandelion(4, {{1, 1}});
    CHECK(smr_partial_dandelion(leaf, *recognize_partial_dandelion(leaf)) == 4);  // frozen
}

TEST_CASE("unicyclic values") {
    CHECK(smr_unicyclic(cycle_graph(6)).value == 4);
    CHECK(smr_unicyclic(cycle_graph(6)).method == SmrMethod::CycleFormula);
    CHECK(smr_unicyclic(n_sun(4)).value == 8);
    CHECK(smr_unicyclic(n_sun(4)).method == SmrMethod::DandelionFormula);
    CHECK(smr_unicyclic(fixtures::cycle_with_tail(3, 2)).value == 4);
    CHECK(smr_unicyclic(fixtures::cycle_with_tail(3, 2)).method == SmrMethod::StarReduction);
    for (int n = 3; n <= 8; ++n) CHECK(smr_unicyclic(n_sun(n)).value == 2 * n);

    CHECK(smr_unicyclic_formula(cycle_graph(4)) == 2);
    CHECK(smr_unicyclic_formula(dandelion(4, {{1, 1}})) == 4);  // frozen
    const Graph c6tail = fixtures::cycle_with_tail(6, 2);
    CHECK(matching_number(c6tail) == 4);              // frozen
    CHECK(smr_unicyclic_formula(c6tail) == 6);        // frozen
    CHECK(smr_unicyclic(c6tail).value == 6);
    CHECK_THROWS_AS(smr_unicyclic(path_graph(3)), UnsupportedShape);
}

TEST_CASE("mr equals MR") {
    CHECK(smr_equals_max(cycle_graph(5)));
    CHECK_FALSE(smr_equals_max(cycle_graph(4)));
    CHECK(smr_equals_max(dandelion(4, {{1, 1}})));
    CHECK_FALSE(smr_equals_max(fixtures::cycle_with_tail(6, 2)));
}

TEST_CASE("forests") {
    CHECK(smr_forest(disjoint_union(path_graph(3), path_graph(2))) == 4);
    CHECK(smr_forest(Graph(5, {})) == 0);
    CHECK(smr_forest(disjoint_union(path_graph(5), cycle_graph(4))) == 6);
    CHECK_THROWS_AS(smr_forest(fixtures::bowtie()), UnsupportedShape);
    CHECK(min_skew_rank(disjoint_union(path_graph(5), cycle_graph(4))).method == SmrMethod::ForestSum);
}

TEST_CASE("spreads and cut vertices") {
    CHECK(skew_rank_spread(path_graph(5), 2) == 0);
    CHECK(skew_rank_spread(path_graph(4), 1) == 2);
    const SkewRankCertificate bow = cut_vertex_reduce(fixtures::bowtie(), 2);
    CHECK(bow.value == 4);  // frozen
    CHECK(bow.method == SmrMethod::CutVertex);
    CHECK(min_skew_rank(fixtures::bowtie()).value == 4);
    CHECK_THROWS_AS(cut_vertex_reduce(fixtures::bowtie(), 0), std::invalid_argument);
    CHECK_THROWS_AS(min_skew_rank(fixtures::petersen()), UnsupportedShape);
}

TEST_CASE("cut vertex reduction agrees with direct values") {
    for (Family f : {Family::Trees, Family::Unicyclic})
        for (int n = family_min_order(f); n <= 8; ++n)
            for (const Graph& g : enumerate_family(f, n))
                for (Vertex v = 0; v < g.order(); ++v) {
                    const int spread = skew_rank_spread(g, v);
                    CHECK((spread == 0 || spread == 2));
                    if (is_cut_vertex(g, v)) CHECK(cut_vertex_reduce(g, v).value == min_skew_rank(g).value);
                }
}

TEST_CASE("certificate methods") {
    CHECK(min_skew_rank(path_graph(5)).method == SmrMethod::PathFormula);
    CHECK(min_skew_rank(star_graph(3)).method == SmrMethod::TreeMatching);
    CHECK(to_string(SmrMethod::DandelionFormula) == "dandelion-formula");
}

TEST_CASE("constructed minimum witnesses") {
    for (Family f : {Family::Trees, Family::Unicyclic})
        for (int n = family_min_order(f); n <= 8; ++n)
            for (const Graph& g : enumerate_family(f, n)) {
                const auto w = construct_min_witness(g);
                REQUIRE(w);
                CHECK(w->has_pattern(g));
                CHECK(exact_rank(*w) == min_skew_rank(g).value);
            }
    CHECK_FALSE(construct_min_witness(fixtures::petersen()));
}
