#include <doctest.h>

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewrank/builders.hpp"
#include "skewrank/enumerate.hpp"
#include "skewrank/matching.hpp"
#include "skewrank/witness.hpp"
#include "support.hpp"

using namespace skewrank;

namespace {

SkewIntMatrix weighted(const Graph& g, std::vector<std::int64_t> w) { return SkewIntMatrix::from_edge_weights(g, w); }

}  // namespace

TEST_CASE("skew matrix construction") {
    CHECK(exact_rank(IntMatrix::Zero(3, 3)) == 0);
    IntMatrix bad(2, 2);
    bad << 0, 1, 1, 0;
    CHECK_THROWS_AS(SkewIntMatrix{bad}, std::invalid_argument);
    IntMatrix diag(2, 2);
    diag << 1, 0, 0, -1;
    CHECK_THROWS_AS(SkewIntMatrix{diag}, std::invalid_argument);
    CHECK_THROWS_AS(weighted(path_graph(3), {1}), std::invalid_argument);
    CHECK_THROWS_AS(weighted(path_graph(3), {1, 0}), std::invalid_argument);

    const SkewIntMatrix m = weighted(path_graph(3), {2, -5});
    CHECK(m(0, 1) == 2);
    CHECK(m(1, 0) == -2);
    CHECK(m(2, 1) == 5);
    CHECK(m.has_pattern(path_graph(3)));
    CHECK(to_text(m) == "3\n0 2 0\n-2 0 -5\n0 5 0\n");
}

TEST_CASE("C4 ranks match the Pfaffian") {
    // edges in order 01, 03, 12, 23
    CHECK(exact_rank(weighted(cycle_graph(4), {1, 1, 1, 1})) == 4);
    CHECK(exact_rank(weighted(cycle_graph(4), {1, 1, 1, -1})) == 2);
}

TEST_CASE("4x4 ranks against the Pfaffian on random skew matrices") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> entry(-3, 3);
    for (int trial = 0; trial < 1000; ++trial) {
        long long a[4][4] = {};
        IntMatrix m = IntMatrix::Zero(4, 4);
        bool nonzero = false;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                a[i][j] = entry(rng);
                a[j][i] = -a[i][j];
                m(i, j) = a[i][j];
                m(j, i) = a[j][i];
                nonzero |= a[i][j] != 0;
            }
        const int expect = fixtures::pfaffian4(a) != 0 ? 4 : nonzero ? 2 : 0;
        CHECK(exact_rank(m) == expect);
    }
}

TEST_CASE("rank of large entries goes through arbitrary precision") {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<std::int64_t> big(100000, 1000000);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 12;
        std::vector<std::int64_t> u(n), v(n), x(n), y(n);
        for (int i = 0; i < n; ++i) u[i] = big(rng), v[i] = big(rng), x[i] = big(rng), y[i] = big(rng);
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = u[i] * v[j] - v[i] * u[j] + (x[i] * y[j] - y[i] * x[j]);
        CHECK(exact_rank(m) == 4);

        using boost::multiprecision::cpp_int;
        CHECK(bareiss_rank(m.cast<cpp_int>()) == 4);
    }
}

TEST_CASE("rectangular and wide inputs") {
    IntMatrix m(2, 3);
    m << 1, 2, 3, 2, 4, 6;
    CHECK(bareiss_rank(m) == 1);
    IntMatrix t(3, 2);
    t << 0, 1, 0, 2, 1, 0;
    CHECK(bareiss_rank(t) == 2);
}

TEST_CASE("random max witnesses") {
    for (const Graph& g : {path_graph(4), cycle_graph(4), star_graph(3), n_sun(5), fixtures::petersen()}) {
        const SkewIntMatrix w = random_max_witness(g, kMaxWitnessAttempts, 17);
        CHECK(w.has_pattern(g));
        CHECK(exact_rank(w) == 2 * matching_number(g));
    }
    CHECK(exact_rank(random_max_witness(star_graph(3))) == 2);
    CHECK_THROWS_AS(random_max_witness(cycle_graph(4), 0), BudgetExhausted);
}

TEST_CASE("random max witnesses over small classes") {
    for (Family f : {Family::Trees, Family::Unicyclic})
        for (int n = family_min_order(f); n <= 8; ++n)
            for (const Graph& g : enumerate_family(f, n)) {
                const SkewIntMatrix w = random_max_witness(g);
                CHECK(w.has_pattern(g));
                CHECK(exact_rank(w) == 2 * matching_number(g));
            }
}

TEST_CASE("tree matrices are rank-constant") {
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::int64_t> mag(1, 9);
    std::bernoulli_distribution sign(0.5);
    for (int n = 1; n <= 8; ++n)
        for (const Graph& t : enumerate_family(Family::Trees, n))
            for (int trial = 0; trial < 100; ++trial) {
                std::vector<std::int64_t> w(t.size());
                for (auto& x : w) x = sign(rng) ? mag(rng) : -mag(rng);
                const int r = exact_rank(weighted(t, w));
                CHECK(r == 2 * matching_number(t));
                CHECK(r % 2 == 0);
            }
}

TEST_CASE("minimum witness search") {
    const auto c4 = min_witness_search(cycle_graph(4), 2);
    REQUIRE(c4);
    CHECK(c4->has_pattern(cycle_graph(4)));
    CHECK(exact_rank(*c4) == 2);

    const auto p4 = min_witness_search(path_graph(4), 4);
    REQUIRE(p4);
    CHECK(exact_rank(*p4) == 4);

    const int pm2[] = {1, 2};
    const auto c6 = min_witness_search(cycle_graph(6), 4, pm2);
    REQUIRE(c6);
    CHECK(c6->has_pattern(cycle_graph(6)));
    CHECK(exact_rank(*c6) == 4);

    // trees only reach 2 match
    CHECK_FALSE(min_witness_search(path_graph(4), 2));
}

TEST_CASE("signed assignments respect the sign gauge") {
    const Graph g = cycle_graph(4);
    const auto [forest, free] = spanning_forest_split(g);
    CHECK(forest.size() == 3);
    CHECK(free.size() == 1);
    const int mags[] = {1, 2};
    long visits = 0;
    for_each_signed_assignment(g, mags, [&](const std::vector<std::int64_t>& w) {
        ++visits;
        for (std::size_t e : forest) CHECK(w[e] > 0);
        return false;
    });
    CHECK(visits == 2 * 2 * 2 * 4);
    long stopped = 0;
    CHECK(for_each_signed_assignment(g, mags, [&](const std::vector<std::int64_t>&) { return ++stopped == 5; }));
    CHECK(stopped == 5);
}
