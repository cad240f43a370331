#include "skewrank/classify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "skewrank/error.hpp"
#include "skewrank/skew_rank.hpp"

namespace skewrank {

std::vector<int> Centipede::joints() const {
    std::vector<int> out;
    for (const auto& [i, leaves] : legs) out.push_back(i);
    return out;
}

bool Centipede::regular() const {
    for (const auto& [i, leaves] : legs)
        if (legs.contains(i + 1)) return false;
    return true;
}

std::optional<Centipede> recognize_centipede(const Graph& t, const Path& spine) {
    if (!is_tree(t)) throw std::invalid_argument("recognize_centipede: not a tree");
    if (!is_path(t, spine)) throw std::invalid_argument("recognize_centipede: spine is not a path of the tree");
    const int n = static_cast<int>(spine.vertices.size());
    std::vector<int> pos(static_cast<std::size_t>(t.order()), 0);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(spine.vertices[static_cast<std::size_t>(i)])] = i + 1;
    Centipede c{spine, {}};
    for (Vertex x = 0; x < t.order(); ++x) {
        if (pos[static_cast<std::size_t>(x)] != 0) continue;
        if (t.degree(x) != 1) return std::nullopt;
        const int i = pos[static_cast<std::size_t>(t.neighbors(x)[0])];
        if (i <= 1 || i >= n) return std::nullopt;
        c.legs[i].push_back(x);
    }
    return c;
}

namespace {

// Positions along an oriented spine; v(i) and deg(i) take 1-based indices.
struct SpineView {
    const Graph& g;
    const Path& p;
    int n;
    std::vector<int> pos;

    SpineView(const Graph& graph, const Path& path)
        : g(graph), p(path), n(static_cast<int>(path.vertices.size())),
          pos(static_cast<std::size_t>(graph.order()), 0) {
        for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(p.vertices[static_cast<std::size_t>(i)])] = i + 1;
    }
    Vertex v(int i) const { return p.vertices[static_cast<std::size_t>(i - 1)]; }
    int deg(int i) const { return g.degree(v(i)); }
    int index(Vertex x) const { return pos[static_cast<std::size_t>(x)]; }
};

ClassificationVerdict start(const Graph& g, const Path& spine) {
    ClassificationVerdict v;
    v.n = static_cast<int>(spine.vertices.size());
    v.spine = spine;
    (void)g;
    return v;
}

ClassificationVerdict& fail(ClassificationVerdict& v, std::string clause, std::string why) {
    v.holds = false;
    v.clause = std::move(clause);
    v.explanation = std::move(why);
    return v;
}

ClassificationVerdict& pass(ClassificationVerdict& v, std::string rule, std::string why) {
    v.holds = true;
    v.clause = std::move(rule);
    v.explanation = std::move(why);
    return v;
}

std::optional<Centipede> centipede_in_original(const Relabeled& r, const Path& spine) {
    Path local;
    for (Vertex x : spine.vertices) local.vertices.push_back(r.from_original[static_cast<std::size_t>(x)]);
    auto c = recognize_centipede(r.graph, local);
    if (!c) return std::nullopt;
    c->spine = spine;
    for (auto& [i, leaves] : c->legs)
        for (Vertex& x : leaves) x = r.to_original[static_cast<std::size_t>(x)];
    return c;
}

// Odd/even joint pair 3 <= r < s <= n-2 with r odd, s even.
std::optional<std::pair<int, int>> bad_joint_pair(const std::vector<int>& joints, int n) {
    for (int r : joints) {
        if (r % 2 == 0 || r < 3) continue;
        for (int s : joints)
            if (s % 2 == 0 && s > r && s <= n - 2) return std::pair{r, s};
    }
    return std::nullopt;
}

bool path_in(const Graph& g, const Path& p) { return is_path(g, p); }

// Clause 1 for a single off-path cycle vertex w.
bool clause_one_holds(const Graph& u, const SpineView& sv, Vertex w, const std::vector<Vertex>& off,
                      std::string& why) {
    const Vertex removed[] = {w};
    Relabeled r = delete_vertices(u, removed);
    if (!is_tree(r.graph)) {
        why = "U - " + std::to_string(w) + " is not a tree";
        return false;
    }
    const int d = diameter(r.graph);
    if (d == sv.n - 1) {
        if (auto c = centipede_in_original(r, sv.p)) {
            if (!bad_joint_pair(c->joints(), sv.n)) return true;
        }
    }
    for (Vertex z : off) {
        if (z == w) continue;
        const bool at_start = u.adjacent(z, sv.v(1));
        const bool at_end = u.adjacent(z, sv.v(sv.n));
        for (int side = 0; side < 2; ++side) {
            if (side == 0 ? !at_start : !at_end) continue;
            Path p2;
            if (side == 0) p2.vertices.push_back(z);
            p2.vertices.insert(p2.vertices.end(), sv.p.vertices.begin(), sv.p.vertices.end());
            if (side == 1) p2.vertices.push_back(z);
            if (d != sv.n) continue;
            Path local;
            for (Vertex x : p2.vertices) local.vertices.push_back(r.from_original[static_cast<std::size_t>(x)]);
            if (!path_in(r.graph, local)) continue;
            auto c = centipede_in_original(r, p2);
            if (!c) continue;
            bool ok = true;
            for (const auto& [i2, leaves] : c->legs) {
                const int i = sv.index(p2.vertices[static_cast<std::size_t>(i2 - 1)]);
                if ((side == 0 && i % 2 == 0) || (side == 1 && i % 2 != 0)) ok = false;
            }
            if (ok) return true;
        }
    }
    why = "U - " + std::to_string(w) +
          " is neither a centipede on P without an odd/even joint pair nor a centipede on P plus an end vertex "
          "with joints of the required parity";
    return false;
}

ClassificationVerdict even_case(const Graph& u, const Path& spine, const CycleInfo& cycle,
                                const TheoremReadings& readings) {
    ClassificationVerdict v = start(u, spine);
    const SpineView sv(u, spine);
    const int n = sv.n;
    std::vector<int> idx;
    for (Vertex x : cycle.vertices) {
        if (sv.index(x)) {
            idx.push_back(sv.index(x));
        } else {
            v.cycle_off_path.push_back(x);
        }
    }
    std::sort(idx.begin(), idx.end());
    for (int i : idx) v.cycle_on_path.push_back(sv.v(i));
    std::sort(v.cycle_off_path.begin(), v.cycle_off_path.end());

    for (Vertex w : v.cycle_off_path) {
        std::string why;
        if (!clause_one_holds(u, sv, w, v.cycle_off_path, why)) return fail(v, "1", why);
    }
    const int k = cycle.length();
    if (k != 3 && k != 4 && k != 6) return fail(v, "2", "cycle length " + std::to_string(k) + " is not 3, 4 or 6");

    const int m = static_cast<int>(idx.size());
    const bool consecutive = m > 0 && idx.back() - idx.front() + 1 == m;
    const int j = m > 0 ? idx.front() : 0;
    v.j = j;

    std::string bad;
    // every i in (lo, hi) of the given parity, outside `skip`, has degree 2
    auto deg2_range = [&](int lo, int hi, int parity, std::initializer_list<int> skip = {}) {
        for (int i = lo + 1; i < hi; ++i) {
            if (i % 2 != parity || std::find(skip.begin(), skip.end(), i) != skip.end()) continue;
            if (sv.deg(i) != 2) {
                bad = "deg v_" + std::to_string(i) + " = " + std::to_string(sv.deg(i)) + ", expected 2";
                return false;
            }
        }
        return true;
    };
    auto deg_is = [&](int i, int want) {
        if (sv.deg(i) == want) return true;
        bad = "deg v_" + std::to_string(i) + " = " + std::to_string(sv.deg(i)) + ", expected " + std::to_string(want);
        return false;
    };
    const std::string at = "j = " + std::to_string(j) + ": ";

    if (k == 3) {
        if (m != 2 || !consecutive) return fail(v, "3", "C_3 does not meet P in two consecutive vertices");
        if (j == 1 && !(deg_is(1, 2) && deg_is(2, 3))) return fail(v, "3b", at + bad);
        if (j == n - 1 && !(deg_is(n, 2) && deg_is(n - 1, 3))) return fail(v, "3c", at + bad);
        if (j % 2 == 1 && j >= 3 && j <= n - 3 && !(deg_is(j, 3) && deg_is(j + 1, 3))) return fail(v, "3d", at + bad);
        if (!deg2_range(1, j, 1) || !deg2_range(j + 1, n, 0)) return fail(v, "3e", at + bad);
        return pass(v, "even", "even case: C_3 on v_" + std::to_string(j) + ", v_" + std::to_string(j + 1) +
                                   "; clauses 1-3 hold");
    }
    if (k == 4 && m == 3 && consecutive) {
        if (!deg_is(j + 1, 2)) return fail(v, "4b", at + bad);
        if (j == 1 && !deg_is(1, 2)) return fail(v, "4c", at + bad);
        if (j == n - 2 && !deg_is(n, 2)) return fail(v, "4d", at + bad);
        if (j == 1 && sv.deg(3) > 3 && !deg2_range(3, n, 0)) return fail(v, "4e", at + bad);
        const int j_4f = readings.clause_4f_literal ? n : n - 2;
        if (j == j_4f && sv.deg(n - 2) > 3 && !deg2_range(1, n - 2, 1)) return fail(v, "4f", at + bad);
        const bool heavy_end = sv.deg(j) > 3 || sv.deg(j + 2) > 3;
        if (j % 2 == 1 && j >= 3 && j <= n - 3 && heavy_end && !deg2_range(j + 2, n, 0)) return fail(v, "4g", at + bad);
        if (j % 2 == 0 && j >= 2 && j <= n - 4 && heavy_end && !deg2_range(1, j, 1)) return fail(v, "4h", at + bad);
        for (int r = 3; r <= n - 3; r += 2) {
            if (r == j || r == j + 2 || sv.deg(r) <= 2) continue;
            if (!deg2_range(r, n, 0, {j, j + 2}))
                return fail(v, "4i", at + "joint v_" + std::to_string(r) + " and " + bad);
        }
        for (int r = 4; r <= n - 2; r += 2) {
            if (r == j || r == j + 2 || sv.deg(r) <= 2) continue;
            if (!deg2_range(1, r, 1, {j, j + 2}))
                return fail(v, "4j", at + "joint v_" + std::to_string(r) + " and " + bad);
        }
        return pass(v, "even", "even case: C_4 on v_" + std::to_string(j) + "..v_" + std::to_string(j + 2) +
                                   "; clauses 1, 2 and 4 hold");
    }
    if (k == 4 && m == 2 && consecutive) {
        if (j % 2 == 0 || j < 3 || j > n - 3) return fail(v, "5a", at + "expected j odd with 3 <= j <= n-3");
        if (!(deg_is(j, 3) && deg_is(j + 1, 3))) return fail(v, "5b", at + bad);
        if (!deg2_range(1, j, 1) || !deg2_range(j + 1, n, 0)) return fail(v, "5c", at + bad);
        return pass(v, "even", "even case: C_4 on v_" + std::to_string(j) + ", v_" + std::to_string(j + 1) +
                                   "; clauses 1, 2 and 5 hold");
    }
    if (k == 4) return fail(v, "4", "C_4 meets P in " + std::to_string(m) + " vertices, not a consecutive run of 2 or 3");

    if (m != 4 || !consecutive) return fail(v, "6", "C_6 does not meet P in four consecutive vertices");
    if (j % 2 == 0 || j > n - 3) return fail(v, "6a", at + "expected j odd with 1 <= j <= n-3");
    if (!(deg_is(j + 1, 2) && deg_is(j + 2, 2))) return fail(v, "6b", at + bad);
    if (j == 1 && !(deg_is(1, 2) && deg_is(4, 3))) return fail(v, "6c", at + bad);
    if (j == n - 3 && !(deg_is(n, 2) && deg_is(n - 3, 3))) return fail(v, "6d", at + bad);
    if (j >= 3 && j <= n - 5 && !(deg_is(j, 3) && deg_is(j + 3, 3))) return fail(v, "6e", at + bad);
    const int lo = readings.clause_6f_literal ? j + 1 : j + 3;
    if (!deg2_range(1, j, 1) || !deg2_range(lo, n, 0)) return fail(v, "6f", at + bad);
    return pass(v, "even", "even case: C_6 on v_" + std::to_string(j) + "..v_" + std::to_string(j + 3) +
                               "; clauses 1, 2 and 6 hold");
}

ClassificationVerdict odd_case(const Graph& u, const Path& spine, const CycleInfo& cycle) {
    ClassificationVerdict v = start(u, spine);
    const SpineView sv(u, spine);
    std::vector<int> idx;
    for (Vertex x : cycle.vertices) {
        if (sv.index(x)) {
            idx.push_back(sv.index(x));
        } else {
            v.cycle_off_path.push_back(x);
        }
    }
    std::sort(idx.begin(), idx.end());
    for (int i : idx) v.cycle_on_path.push_back(sv.v(i));
    if (!idx.empty()) v.j = idx.front();
    if (cycle.length() != 4) return fail(v, "odd.cycle", "cycle is C_" + std::to_string(cycle.length()) + ", not C_4");
    if (idx.size() != 3) return fail(v, "odd.intersection", "C_4 meets P in " + std::to_string(idx.size()) + " vertices, not 3");
    const Vertex w = v.cycle_off_path.front();
    const Vertex removed[] = {w};
    Relabeled r = delete_vertices(u, removed);
    const std::string uw = "U - " + std::to_string(w);
    if (!is_tree(r.graph)) return fail(v, "odd.centipede", uw + " is not a tree");
    if (diameter(r.graph) != v.n - 1) return fail(v, "odd.centipede", "P is not a diametrical path of " + uw);
    auto c = centipede_in_original(r, spine);
    if (!c) return fail(v, "odd.centipede", uw + " is not a centipede on P");
    v.centipede = c;
    if (!c->regular()) return fail(v, "odd.regular", uw + " has consecutive joints");
    for (int i : c->joints())
        if (i % 2 != 0) return fail(v, "odd.joint-parity", "joint v_" + std::to_string(i) + " has odd index");
    return pass(v, "odd", "odd case: C_4 meets P in 3 vertices; " + uw +
                              " is a regular centipede, joints even-indexed");
}

template <class Predicate>
ClassificationVerdict aggregate(const Graph& g, Quantifier q, Predicate predicate) {
    std::optional<ClassificationVerdict> first;
    for (const Path& p : diametrical_paths(g)) {
        for (const Path& oriented : {p, p.reversed()}) {
            ClassificationVerdict v = predicate(oriented);
            if (!first) first = v;
            if (q == Quantifier::Existential && v.holds) return v;
            if (q == Quantifier::Universal && !v.holds) return v;
        }
    }
    return *first;
}

std::string describe(const Graph& g) { return serialize_graph(g, GraphFormat::Graph6); }

}  // namespace

ClassificationVerdict tree_predicate(const Graph& t, const Path& spine) {
    ClassificationVerdict v = start(t, spine);
    auto c = recognize_centipede(t, spine);
    if (!c) return fail(v, "tree.centipede", "some vertex off P is not a leg on an interior vertex of P");
    v.centipede = c;
    const std::vector<int> joints = c->joints();
    if (v.n % 2 != 0) {
        if (!c->regular()) return fail(v, "tree.odd.regular", "consecutive joints");
        for (int i : joints)
            if (i % 2 != 0) return fail(v, "tree.odd.joint-parity", "joint v_" + std::to_string(i) + " has odd index");
        return pass(v, "tree.odd", "odd case: regular centipede, joints even-indexed");
    }
    if (auto pair = bad_joint_pair(joints, v.n))
        return fail(v, "tree.even.joint-pair", "joints v_" + std::to_string(pair->first) + " (odd) and v_" +
                                                   std::to_string(pair->second) + " (even) with 3 <= r < s <= n-2");
    return pass(v, "tree.even", "even case: centipede with no odd/even joint pair");
}

ClassificationVerdict unicyclic_predicate(const Graph& u, const Path& spine, const TheoremReadings& readings) {
    const CycleInfo cycle = unique_cycle(u);
    const int n = static_cast<int>(spine.vertices.size());
    if (n <= 4) {
        ClassificationVerdict v = start(u, spine);
        for (Vertex x : cycle.vertices) (spine.contains(x) ? v.cycle_on_path : v.cycle_off_path).push_back(x);
        const int got = smr_unicyclic(u).value, want = smr_path(n);
        const std::string why = "small case: mr- = " + std::to_string(got) + ", mr-(P_" + std::to_string(n) +
                                ") = " + std::to_string(want);
        return got == want ? pass(v, "small-case", why) : fail(v, "small-case", why);
    }
    return n % 2 != 0 ? odd_case(u, spine, cycle) : even_case(u, spine, cycle, readings);
}

ClassificationVerdict tree_theorem(const Graph& t, Quantifier q) {
    if (!is_tree(t)) throw std::invalid_argument("tree_theorem: not a tree");
    return aggregate(t, q, [&](const Path& p) { return tree_predicate(t, p); });
}

ClassificationVerdict unicyclic_theorem(const Graph& u, Quantifier q, const TheoremReadings& readings) {
    if (!is_connected_unicyclic(u)) throw std::invalid_argument("unicyclic_theorem: not connected unicyclic");
    return aggregate(u, q, [&](const Path& p) { return unicyclic_predicate(u, p, readings); });
}

bool reaches_path_bound(const Graph& g) { return min_skew_rank(g).value == smr_path(diameter(g) + 1); }

ClassificationVerdict tree_classification(const Graph& t) {
    ClassificationVerdict v = tree_theorem(t);
    if (v.holds != reaches_path_bound(t))
        throw InternalContradiction("tree theorem verdict disagrees with direct computation on " + describe(t));
    return v;
}

ClassificationVerdict unicyclic_classification(const Graph& u) {
    ClassificationVerdict v = unicyclic_theorem(u);
    if (v.holds != reaches_path_bound(u))
        throw InternalContradiction("unicyclic theorem verdict disagrees with direct computation on " + describe(u));
    return v;
}

std::string necessary_conditions_violation(const Graph& u, const Path& spine) {
    const CycleInfo cycle = unique_cycle(u);
    std::vector<Vertex> off;
    int on = 0;
    for (Vertex x : cycle.vertices) {
        if (spine.contains(x)) {
            ++on;
        } else {
            off.push_back(x);
        }
    }
    for (Vertex x : off)
        if (u.degree(x) != 2)
            return "off-path cycle vertex " + std::to_string(x) + " has degree " + std::to_string(u.degree(x));
    for (Vertex w : off) {
        const Vertex removed[] = {w};
        Relabeled r = delete_vertices(u, removed);
        bool centipede = false;
        for (const Path& p : diametrical_paths(r.graph))
            if (recognize_centipede(r.graph, p)) centipede = true;
        if (!centipede) return "U - " + std::to_string(w) + " is not a centipede";
    }
    const int k = cycle.length();
    const bool counts_ok = (k == 3 && on == 2) || (k == 4 && (on == 2 || on == 3)) || (k == 6 && on == 4);
    if (k != 3 && k != 4 && k != 6) return "cycle length " + std::to_string(k);
    if (!counts_ok) return "C_" + std::to_string(k) + " meets P in " + std::to_string(on) + " vertices";
    return "";
}

}  // namespace skewrank
