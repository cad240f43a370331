#include "skewrank/sweep.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "skewrank/caps.hpp"
#include "skewrank/classify.hpp"
#include "skewrank/error.hpp"
#include "skewrank/matching.hpp"
#include "skewrank/oracle.hpp"
#include "skewrank/skew_rank.hpp"
#include "skewrank/witness.hpp"

namespace skewrank {

namespace {

using Status = CheckOutcome::Status;

std::string num(long x) { return std::to_string(x); }

bool supported(const Graph& g) {
    if (g.order() == 0) return true;
    try {
        (void)min_skew_rank(g);
        return true;
    } catch (const UnsupportedShape&) {
        return false;
    }
}

int smr(const Graph& g) { return min_skew_rank(g).value; }

bool is_tree_or_unicyclic(const Graph& g) { return is_tree(g) || is_connected_unicyclic(g); }

// ---- the checks ---------------------------------------------------------

CheckOutcome tree_formula(const Graph& g, const CheckContext& ctx) {
    const int want = 2 * brute_matching(g);
    if (smr_tree(g) != want) return CheckOutcome::fail("smr_tree " + num(smr_tree(g)) + " != 2*match " + num(want));
    if (diameter(g) + 1 == g.order() && smr_path(g.order()) != want)
        return CheckOutcome::fail("path formula disagrees with 2*match");
    std::mt19937_64 rng(ctx.seed);
    std::uniform_int_distribution<std::int64_t> mag(1, kMaxWitnessWeight);
    std::bernoulli_distribution neg(0.5);
    std::vector<std::int64_t> w(g.size());
    for (int trial = 0; trial < 20; ++trial) {
        for (auto& x : w) x = mag(rng) * (neg(rng) ? -1 : 1);
        const int r = exact_rank(SkewIntMatrix::from_edge_weights(g, w));
        if (r != want) return CheckOutcome::fail("random weighting has rank " + num(r) + ", expected " + num(want));
    }
    return CheckOutcome::pass();
}

CheckOutcome algorithm_vs_corollary(const Graph& g, const CheckContext&) {
    const int by_algorithm = evaluate_trace(star_reduce(g));
    const int by_formula = smr_unicyclic_formula(g);
    if (by_algorithm != by_formula)
        return CheckOutcome::fail("star reduction " + num(by_algorithm) + " != corollary " + num(by_formula));
    const bool equal_max = by_algorithm == max_skew_rank(g);
    if (smr_equals_max(g) != equal_max) return CheckOutcome::fail("mr- = MR- condition disagrees with values");
    return CheckOutcome::pass();
}

ClassificationVerdict theorem(const Graph& g, Quantifier q, const TheoremReadings& readings = {}) {
    return is_tree(g) ? tree_theorem(g, q) : unicyclic_theorem(g, q, readings);
}

CheckOutcome classification_equivalence(const Graph& g, const CheckContext&) {
    const ClassificationVerdict v = theorem(g, Quantifier::Universal);
    const bool direct = reaches_path_bound(g);
    if (v.holds != direct)
        return CheckOutcome::fail("theorem says " + std::string(v.holds ? "holds" : "fails") + " (clause " + v.clause +
                                  "), direct comparison says " + (direct ? "holds" : "fails"));
    return CheckOutcome::pass();
}

CheckOutcome quantifier_readings(const Graph& g, const CheckContext&) {
    const ClassificationVerdict e = theorem(g, Quantifier::Existential);
    const ClassificationVerdict u = theorem(g, Quantifier::Universal);
    if (e.holds == u.holds) return CheckOutcome::pass();
    return CheckOutcome::info("existential " + std::string(e.holds ? "holds" : "fails") + ", universal " +
                              (u.holds ? "holds" : "fails") + ", direct " + (reaches_path_bound(g) ? "holds" : "fails"));
}

CheckOutcome clause_reading(const Graph& g, const TheoremReadings& alt, const char* name) {
    const bool a = unicyclic_theorem(g).holds;
    const bool b = unicyclic_theorem(g, Quantifier::Universal, alt).holds;
    if (a == b) return CheckOutcome::pass();
    return CheckOutcome::info(std::string(name) + " reading " + (b ? "holds" : "fails") + ", amended reading " +
                              (a ? "holds" : "fails") + ", direct " + (reaches_path_bound(g) ? "holds" : "fails"));
}

CheckOutcome certification(const Graph& g, const CheckContext&) {
    if (static_cast<int>(g.size()) > oracle_edge_cap(kBruteRankEdgeCap))
        return CheckOutcome::skip("more edges than the brute-force cap");
    if (g.order() > kZeroForcingOrderCap) return CheckOutcome::skip("too many vertices for Z-");
    const int lower = g.order() - skew_zero_forcing_number(g);
    const int upper = brute_min_skew_rank(g, kDefaultEntrySet, lower);
    const std::string bounds = "brute " + num(upper) + ", |G| - Z- " + num(lower);
    if (!supported(g)) {
        return upper == lower ? CheckOutcome::pass() : CheckOutcome::info("gap on unsupported shape: " + bounds);
    }
    const int formula = smr(g);
    if (upper == lower && lower == formula) return CheckOutcome::pass();
    if (!components_tree_or_unicyclic(g)) return CheckOutcome::info("gap: " + bounds + ", formula " + num(formula));
    return CheckOutcome::fail(bounds + ", formula " + num(formula));
}

CheckOutcome unique_pm(const Graph& g, const CheckContext&) {
    if (!supported(g)) return CheckOutcome::skip("mr- not available");
    const int value = smr(g);
    const bool full = value == g.order() && value == max_skew_rank(g);
    const bool unique = is_unique_perfect_matching(g).kind == PerfectMatchingCount::Kind::Unique;
    if (full != unique)
        return CheckOutcome::fail("mr- = " + num(value) + ", |G| = " + num(g.order()) + ", unique perfect matching: " +
                                  (unique ? "yes" : "no"));
    return CheckOutcome::pass();
}

CheckOutcome berge(const Graph& g, const CheckContext&) {
    const Matching m = maximum_matching(g);
    if (auto p = has_augmenting_path(g, m)) return CheckOutcome::fail("maximum matching has an augmenting path");
    if (m.size() > 0) {
        std::vector<Edge> fewer(m.edges().begin() + 1, m.edges().end());
        if (!has_augmenting_path(g, Matching(g, fewer)))
            return CheckOutcome::fail("non-maximum matching without an augmenting path");
    }
    return CheckOutcome::pass();
}

CheckOutcome matching_brute(const Graph& g, const CheckContext&) {
    const int brute = brute_matching(g);
    const int fast = matching_number(g);
    const int built = static_cast<int>(maximum_matching(g).size());
    if (brute != fast || brute != built)
        return CheckOutcome::fail("brute " + num(brute) + ", matching_number " + num(fast) + ", maximum_matching " +
                                  num(built));
    return CheckOutcome::pass();
}

CheckOutcome induced_monotone(const Graph& g, const CheckContext&) {
    if (!supported(g)) return CheckOutcome::skip("mr- not available");
    const int value = smr(g);
    for (Vertex v = 0; v < g.order(); ++v) {
        const Vertex gone[] = {v};
        const Graph h = delete_vertices(g, gone).graph;
        if (!supported(h)) continue;
        if (smr(h) > value) return CheckOutcome::fail("mr-(G - " + num(v) + ") = " + num(smr(h)) + " > " + num(value));
    }
    return CheckOutcome::pass();
}

CheckOutcome diameter_chain(const Graph& g, const CheckContext&) {
    if (!is_connected(g)) return CheckOutcome::skip("disconnected");
    if (!supported(g)) return CheckOutcome::skip("mr- not available");
    const int d = diameter(g), path_value = smr_path(d + 1), value = smr(g);
    if (!(d <= path_value && path_value <= value))
        return CheckOutcome::fail("diam " + num(d) + ", mr-(P) " + num(path_value) + ", mr- " + num(value));
    if (g.order() <= kZeroForcingOrderCap) {
        const int lower = g.order() - skew_zero_forcing_number(g);
        if (lower > value) return CheckOutcome::fail("|G| - Z- = " + num(lower) + " exceeds mr- = " + num(value));
    }
    return CheckOutcome::pass();
}

CheckOutcome deletion_lemma(const Graph& g, const CheckContext&) {
    if (!is_connected(g) || !supported(g)) return CheckOutcome::skip("not applicable");
    if (!reaches_path_bound(g)) return CheckOutcome::skip("mr- exceeds the path value");
    const int value = smr(g);
    for (const Path& p : diametrical_paths(g)) {
        std::vector<Vertex> off;
        for (Vertex v = 0; v < g.order(); ++v)
            if (!p.contains(v)) off.push_back(v);
        std::vector<std::vector<Vertex>> sets{off};
        for (Vertex v : off) sets.push_back({v});
        for (const auto& h : sets) {
            if (h.empty()) continue;
            const Graph rest = delete_vertices(g, h).graph;
            if (smr(rest) != value)
                return CheckOutcome::fail("deleting " + num(static_cast<long>(h.size())) +
                                          " off-path vertices changes mr- to " + num(smr(rest)));
        }
    }
    return CheckOutcome::pass();
}

CheckOutcome cut_vertex(const Graph& g, const CheckContext&) {
    if (!is_connected(g) || !supported(g)) return CheckOutcome::skip("not applicable");
    const int value = smr(g);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!is_cut_vertex(g, v)) continue;
        const int reduced = cut_vertex_reduce(g, v).value;
        if (reduced != value)
            return CheckOutcome::fail("cut vertex " + num(v) + " gives " + num(reduced) + ", mr- is " + num(value));
        // r_v(G) is the largest branch spread
        const Vertex gone[] = {v};
        const Relabeled minus = delete_vertices(g, gone);
        int widest = 0;
        for (const auto& comp : connected_components(minus.graph)) {
            std::vector<Vertex> keep{v};
            for (Vertex x : comp) keep.push_back(minus.to_original[static_cast<std::size_t>(x)]);
            const Relabeled branch = induced_subgraph(g, keep);
            widest = std::max(widest, skew_rank_spread(branch.graph, branch.from_original[static_cast<std::size_t>(v)]));
        }
        if (skew_rank_spread(g, v) != widest)
            return CheckOutcome::fail("spread at cut vertex " + num(v) + " is not the largest branch spread");
    }
    return CheckOutcome::pass();
}

CheckOutcome star_order_independence(const Graph& g, const CheckContext& ctx) {
    const StarReductionTrace base = star_reduce(g);
    const int value = evaluate_trace(base);
    for (std::uint64_t k = 0; k < 3; ++k) {
        const StarReductionTrace other = star_reduce(g, random_star_chooser(ctx.seed + k));
        if (evaluate_trace(other) != value) return CheckOutcome::fail("star order changes the reduced value");
        if (other.terminal_is_cycle() != base.terminal_is_cycle())
            return CheckOutcome::fail("star order changes whether the reduced form is a bare cycle");
        if (other.s != base.s) return CheckOutcome::fail("star order changes the accumulated s");
    }
    return CheckOutcome::pass();
}

CheckOutcome max_witness(const Graph& g, const CheckContext& ctx) {
    const int want = 2 * matching_number(g);
    const SkewIntMatrix m = random_max_witness(g, kMaxWitnessAttempts, ctx.seed);
    if (!m.has_pattern(g) || exact_rank(m) != want) return CheckOutcome::fail("max witness has wrong rank or pattern");
    if (!is_tree_or_unicyclic(g)) return CheckOutcome::pass();
    auto low = construct_min_witness(g, ctx.seed);
    if (!low) return CheckOutcome::fail("no minimum-rank witness constructed");
    if (!low->has_pattern(g) || exact_rank(*low) != smr(g))
        return CheckOutcome::fail("minimum witness has rank " + num(exact_rank(*low)) + ", mr- is " + num(smr(g)));
    return CheckOutcome::pass();
}

CheckOutcome necessary_conditions(const Graph& g, const CheckContext&) {
    const CycleInfo cycle = unique_cycle(g);
    const bool positive = reaches_path_bound(g);
    for (const Path& p : diametrical_paths(g)) {
        int on = 0;
        for (Vertex x : cycle.vertices) on += p.contains(x) ? 1 : 0;
        if (on > cycle.length() / 2 + 1)
            return CheckOutcome::fail("cycle meets a diametrical path in " + num(on) + " > floor(k/2) + 1 vertices");
        if (!positive) continue;
        if (auto why = necessary_conditions_violation(g, p); !why.empty())
            return CheckOutcome::fail("positive instance violates a necessary condition: " + why);
    }
    return CheckOutcome::pass();
}

CheckOutcome orientation_symmetry(const Graph& g, const CheckContext&) {
    const bool tree = is_tree(g);
    for (const Path& p : diametrical_paths(g)) {
        const bool a = tree ? tree_predicate(g, p).holds : unicyclic_predicate(g, p).holds;
        const bool b = tree ? tree_predicate(g, p.reversed()).holds : unicyclic_predicate(g, p.reversed()).holds;
        if (a != b) return CheckOutcome::fail("predicate differs between the two orientations of a diametrical path");
    }
    std::vector<Vertex> reverse(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) reverse[static_cast<std::size_t>(v)] = g.order() - 1 - v;
    const Graph h = permute(g, reverse);
    if (theorem(g, Quantifier::Universal).holds != theorem(h, Quantifier::Universal).holds)
        return CheckOutcome::fail("verdict changes under relabeling");
    return CheckOutcome::pass();
}

CheckOutcome spread_range(const Graph& g, const CheckContext&) {
    if (!supported(g)) return CheckOutcome::skip("mr- not available");
    for (Vertex v = 0; v < g.order(); ++v) {
        const int r = skew_rank_spread(g, v);
        if (r != 0 && r != 2) return CheckOutcome::fail("spread " + num(r) + " at vertex " + num(v));
    }
    return CheckOutcome::pass();
}

std::vector<CheckDef> build_registry() {
    using F = Family;
    const std::vector<F> tu{F::Trees, F::Unicyclic};
    const std::vector<F> all{F::Trees, F::Unicyclic, F::Labeled};
    return {
        {"tree-formula", "mr- = 2 match, and random weightings all have rank 2 match", {F::Trees}, tree_formula},
        {"algorithm-vs-corollary", "star reduction value equals the matching corollary", {F::Unicyclic},
         algorithm_vs_corollary},
        {"classification-equivalence", "theorem predicate agrees with mr- == mr-(P_n)", tu, classification_equivalence},
        {"certification", "brute-force rank = formula = |G| - Z-", all, certification},
        {"unique-pm", "mr- = |G| = MR- iff a unique perfect matching", all, unique_pm},
        {"berge", "maximum iff no augmenting path", all, berge},
        {"matching-brute", "matching number equals exhaustive search", all, matching_brute},
        {"induced-monotone", "mr- does not grow on deleting a vertex", all, induced_monotone},
        {"diameter-chain", "diam <= mr-(P) <= mr- and |G| - Z- <= mr-", all, diameter_chain},
        {"deletion-lemma", "deleting off-path vertices keeps mr- when it equals mr-(P)", all, deletion_lemma},
        {"cut-vertex", "cut-vertex reduction matches mr- and the spread rule", all, cut_vertex},
        {"star-order-independence", "the order of star removals does not matter", {F::Unicyclic},
         star_order_independence},
        {"max-witness", "random witness reaches 2 match; constructed witness reaches mr-", all, max_witness},
        {"necessary-conditions", "positive instances satisfy the necessary conditions", {F::Unicyclic},
         necessary_conditions},
        {"orientation-symmetry", "verdicts do not depend on path orientation or labels", tu, orientation_symmetry},
        {"spread-range", "rank spread is 0 or 2 at every vertex", all, spread_range},
        {"quantifier-readings", "existential and universal path quantification (informational)", tu,
         quantifier_readings},
        {"clause-4f-readings", "literal clause 4f (j = n) against j = n - 2 (informational)", {F::Unicyclic},
         [](const Graph& g, const CheckContext&) {
             TheoremReadings r;
             r.clause_4f_literal = true;
             return clause_reading(g, r, "literal 4f");
         }},
        {"clause-6f-readings", "literal clause 6f ranges against ranges past the cycle (informational)",
         {F::Unicyclic},
         [](const Graph& g, const CheckContext&) {
             TheoremReadings r;
             r.clause_6f_literal = true;
             return clause_reading(g, r, "literal 6f");
         }},
    };
}

std::uint64_t mix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

nlohmann::json counterexample_json(const Counterexample& c) {
    return {{"graph6", c.graph6}, {"check", c.check}, {"details", c.details}};
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
    static const std::vector<CheckDef> registry = build_registry();
    return registry;
}

const CheckDef& find_check(const std::string& id) {
    for (const auto& c : check_registry())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown check '" + id + "'");
}

std::vector<std::string> default_checks(Family f) {
    std::vector<std::string> out;
    for (const auto& c : check_registry())
        if (std::find(c.families.begin(), c.families.end(), f) != c.families.end()) out.push_back(c.id);
    return out;
}

CheckOutcome run_check(const CheckDef& check, const Graph& g, const CheckContext& ctx) {
    try {
        return check.run(g, ctx);
    } catch (const CapExceeded& e) {
        return CheckOutcome::skip(e.what());
    } catch (const UnsupportedShape& e) {
        return CheckOutcome::skip(e.what());
    } catch (const std::exception& e) {
        return CheckOutcome::fail(std::string("exception: ") + e.what());
    }
}

std::vector<Counterexample> SweepReport::counterexamples() const {
    std::vector<Counterexample> out;
    for (const auto& [id, t] : checks) out.insert(out.end(), t.counterexamples.begin(), t.counterexamples.end());
    return out;
}

bool SweepReport::ok() const {
    for (const auto& [id, t] : checks)
        if (t.fail) return false;
    return true;
}

SweepReport run_sweep(Family family, int n, const SweepOptions& options) {
    if (n > family_max_order(family))
        throw CapExceeded(to_string(family) + " sweeps are capped at " + std::to_string(family_max_order(family)) +
                          " vertices");
    std::vector<const CheckDef*> checks;
    for (const auto& id : options.checks.empty() ? default_checks(family) : options.checks) {
        const CheckDef& c = find_check(id);
        if (std::find(c.families.begin(), c.families.end(), family) == c.families.end())
            throw std::invalid_argument("check '" + id + "' does not apply to " + to_string(family));
        checks.push_back(&c);
    }

    SweepReport report;
    report.family = family;
    report.min_order = std::max(options.min_order, family_min_order(family));
    report.max_order = n;
    report.seed = options.seed;
    std::vector<Graph> graphs;
    for (int order = report.min_order; order <= n; ++order) {
        auto batch = enumerate_family(family, order);
        report.counts_by_order[order] = static_cast<long>(batch.size());
        graphs.insert(graphs.end(), std::make_move_iterator(batch.begin()), std::make_move_iterator(batch.end()));
    }
    report.graph_count = static_cast<long>(graphs.size());

    // workers fill disjoint slots; merged afterwards in graph order
    std::vector<std::vector<CheckOutcome>> outcomes(graphs.size());
    auto work = [&](std::size_t first, std::size_t stride) {
        for (std::size_t k = first; k < graphs.size(); k += stride) {
            const CheckContext ctx{family, mix(options.seed ^ mix(k))};
            outcomes[k].reserve(checks.size());
            for (const CheckDef* c : checks) outcomes[k].push_back(run_check(*c, graphs[k], ctx));
        }
    };
    const std::size_t jobs = static_cast<std::size_t>(std::max(1, options.jobs));
    if (jobs == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
    }

    for (const CheckDef* c : checks) report.checks[c->id];
    for (std::size_t k = 0; k < graphs.size(); ++k) {
        for (std::size_t c = 0; c < checks.size(); ++c) {
            CheckTally& t = report.checks[checks[c]->id];
            const CheckOutcome& o = outcomes[k][c];
            switch (o.status) {
                case Status::Pass: ++t.pass; break;
                case Status::Skip: ++t.skip; break;
                case Status::Fail:
                    ++t.fail;
                    t.counterexamples.push_back({to_graph6(graphs[k]), checks[c]->id, o.details});
                    break;
                case Status::Info:
                    ++t.info;
                    t.notes.push_back({to_graph6(graphs[k]), checks[c]->id, o.details});
                    break;
            }
        }
    }
    return report;
}

std::string to_json(const SweepReport& r, int indent) {
    nlohmann::json j;
    j["kind"] = "sweep";
    j["family"] = to_string(r.family);
    j["min_order"] = r.min_order;
    j["n"] = r.max_order;
    j["seed"] = r.seed;
    j["graph_count"] = r.graph_count;
    nlohmann::json counts = nlohmann::json::object();
    for (const auto& [order, count] : r.counts_by_order) counts[std::to_string(order)] = count;
    j["counts_by_order"] = counts;
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [id, t] : r.checks) {
        nlohmann::json c = {{"pass", t.pass}, {"fail", t.fail}, {"skip", t.skip}, {"info", t.info}};
        c["counterexamples"] = nlohmann::json::array();
        for (const auto& x : t.counterexamples) c["counterexamples"].push_back(counterexample_json(x));
        c["notes"] = nlohmann::json::array();
        for (const auto& x : t.notes) c["notes"].push_back(counterexample_json(x));
        checks[id] = c;
    }
    j["checks"] = checks;
    j["counterexamples"] = nlohmann::json::array();
    for (const auto& x : r.counterexamples()) j["counterexamples"].push_back(counterexample_json(x));
    j["ok"] = r.ok();
    return j.dump(indent) + "\n";
}

std::string to_csv(const SweepReport& r) {
    std::ostringstream out;
    out << "check,pass,fail,skip,info\n";
    for (const auto& [id, t] : r.checks)
        out << id << ',' << t.pass << ',' << t.fail << ',' << t.skip << ',' << t.info << '\n';
    return out.str();
}

Graph collapse_twin_leaves(const Graph& g) {
    std::vector<Vertex> drop;
    for (Vertex v = 0; v < g.order(); ++v) {
        bool kept = false;
        for (Vertex w : g.neighbors(v)) {
            if (g.degree(w) != 1 || g.degree(v) == 1) continue;
            if (kept) drop.push_back(w);
            kept = true;
        }
    }
    return delete_vertices(g, drop).graph;
}

SmallCaseCatalog small_case_catalog(int max_order) {
    SmallCaseCatalog cat;
    cat.max_order = max_order;
    std::map<int, std::set<std::string>> seen;
    for (int order = family_min_order(Family::Unicyclic); order <= max_order; ++order) {
        for (const Graph& g : enumerate_family(Family::Unicyclic, order)) {
            const int d = diameter(g);
            if (d > 3 || !reaches_path_bound(g)) continue;
            cat.members[d].push_back(to_graph6(g));
            const Graph skeleton = collapse_twin_leaves(g);
            if (seen[d].insert(canonical_form(skeleton)).second) cat.skeletons[d].push_back(to_graph6(skeleton));
        }
    }
    return cat;
}

std::string to_json(const SmallCaseCatalog& c, int indent) {
    nlohmann::json j;
    j["kind"] = "small-cases";
    j["max_order"] = c.max_order;
    nlohmann::json by = nlohmann::json::object();
    for (int d = 1; d <= 3; ++d) {
        nlohmann::json e;
        e["members"] = c.members.contains(d) ? nlohmann::json(c.members.at(d)) : nlohmann::json::array();
        e["skeletons"] = c.skeletons.contains(d) ? nlohmann::json(c.skeletons.at(d)) : nlohmann::json::array();
        by[std::to_string(d)] = e;
    }
    j["diameters"] = by;
    return j.dump(indent) + "\n";
}

}  // namespace skewrank
