#include "skewrank/skew_rank.hpp"

#include <algorithm>
#include <memory>
#include <random>
#include <stdexcept>

#include "skewrank/error.hpp"
#include "skewrank/matching.hpp"

namespace skewrank {

int smr_path(int n) {
    if (n < 1) throw std::invalid_argument("smr_path: n must be positive");
    return n % 2 == 0 ? n : n - 1;
}

int smr_cycle(int n) {
    if (n < 3) throw std::invalid_argument("smr_cycle: n must be at least 3");
    return n % 2 == 0 ? n - 2 : n - 1;
}

int max_skew_rank(const Graph& g) { return 2 * matching_number(g); }

int smr_tree(const Graph& t) {
    const ShapeKind kind = classify_shape(t).kind;
    if (t.order() > 0 && kind != ShapeKind::Tree && kind != ShapeKind::Forest)
        throw UnsupportedShape("smr_tree: input is not a forest");
    return 2 * matching_number(t);
}

// ---- pendant stars ------------------------------------------------------

std::optional<PendantStar> pendant_star_at(const Graph& u, Vertex center) {
    if (!u.has_vertex(center) || u.degree(center) < 2) return std::nullopt;
    const Vertex removed[] = {center};
    const Relabeled rest = delete_vertices(u, removed);
    PendantStar star{center, {}};
    int unicyclic_parts = 0;
    for (const auto& comp : connected_components(rest.graph)) {
        if (comp.size() == 1) {
            star.leaves.push_back(rest.to_original[static_cast<std::size_t>(comp.front())]);
            continue;
        }
        if (!is_connected_unicyclic(induced_subgraph(rest.graph, comp).graph)) return std::nullopt;
        ++unicyclic_parts;
    }
    if (star.leaves.empty() || unicyclic_parts != 1) return std::nullopt;
    std::sort(star.leaves.begin(), star.leaves.end());
    return star;
}

std::optional<PendantStar> find_pendant_star(const Graph& u) {
    if (!is_connected_unicyclic(u)) throw UnsupportedShape("find_pendant_star: input is not connected unicyclic");
    for (Vertex v = 0; v < u.order(); ++v) {
        const auto& nb = u.neighbors(v);
        // k >= 1 forces a leaf neighbor
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return u.degree(w) == 1; })) continue;
        if (auto star = pendant_star_at(u, v)) return star;
    }
    return std::nullopt;
}

StarChooser random_star_chooser(std::uint64_t seed) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng](const Graph& g) -> std::optional<PendantStar> {
        std::vector<PendantStar> all;
        for (Vertex v = 0; v < g.order(); ++v)
            if (auto s = pendant_star_at(g, v)) all.push_back(*s);
        if (all.empty()) return std::nullopt;
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        return all[pick(*rng)];
    };
}

// ---- dandelions ---------------------------------------------------------

bool PartialDandelion::is_sun() const {
    return attached_count() == cycle.length() &&
           std::all_of(attachments.begin(), attachments.end(), [](const auto& kv) { return kv.second.size() == 1; });
}

bool PartialDandelion::is_partial_sun() const {
    return attached_count() < cycle.length() &&
           std::all_of(attachments.begin(), attachments.end(), [](const auto& kv) { return kv.second.size() == 1; });
}

std::optional<PartialDandelion> recognize_partial_dandelion(const Graph& g) {
    const Shape shape = classify_shape(g);
    if (shape.kind != ShapeKind::Unicyclic) throw UnsupportedShape("recognize_partial_dandelion: not connected unicyclic");
    PartialDandelion d{*shape.cycle, {}};
    for (Vertex v = 0; v < g.order(); ++v) {
        if (d.cycle.contains(v)) continue;
        if (g.degree(v) != 1) return std::nullopt;
        const Vertex anchor = g.neighbors(v).front();
        if (!d.cycle.contains(anchor)) return std::nullopt;
        d.attachments[anchor].push_back(v);
    }
    if (d.attachments.empty()) return std::nullopt;
    return d;
}

int smr_partial_dandelion(const Graph& u, const PartialDandelion& d) {
    std::vector<Vertex> attached;
    for (const auto& [v, leaves] : d.attachments) attached.push_back(v);
    return 2 * d.attached_count() + 2 * matching_number(delete_vertices(u, attached).graph);
}

// ---- reduction ----------------------------------------------------------

StarReductionTrace star_reduce(const Graph& u) { return star_reduce(u, [](const Graph& g) { return find_pendant_star(g); }); }

StarReductionTrace star_reduce(const Graph& u, const StarChooser& choose) {
    if (!is_connected_unicyclic(u)) throw UnsupportedShape("star_reduce: input is not connected unicyclic");
    StarReductionTrace trace;
    Graph current = u;
    std::vector<Vertex> to_original(static_cast<std::size_t>(u.order()));
    for (Vertex v = 0; v < u.order(); ++v) to_original[static_cast<std::size_t>(v)] = v;

    while (auto star = choose(current)) {
        std::vector<Vertex> removed{star->center};
        removed.insert(removed.end(), star->leaves.begin(), star->leaves.end());
        Relabeled rest = delete_vertices(current, removed);
        if (!is_connected_unicyclic(rest.graph))
            throw InternalContradiction("star_reduce: removing a pendant star left a graph that is not connected unicyclic");

        ReductionStep step;
        step.star.center = to_original[static_cast<std::size_t>(star->center)];
        for (Vertex l : star->leaves) step.star.leaves.push_back(to_original[static_cast<std::size_t>(l)]);
        std::vector<Vertex> next_map;
        for (Vertex v : rest.to_original) next_map.push_back(to_original[static_cast<std::size_t>(v)]);
        trace.s += 2;
        step.s = trace.s;
        step.remaining = rest.graph;
        step.to_original = next_map;
        trace.steps.push_back(std::move(step));

        current = std::move(rest.graph);
        to_original = std::move(next_map);
    }

    trace.terminal = current;
    trace.terminal_to_original = to_original;
    const CycleInfo cycle = unique_cycle(current);
    if (cycle.length() == current.order()) {
        trace.terminal_form = cycle;
    } else if (auto d = recognize_partial_dandelion(current)) {
        trace.terminal_form = *d;
    } else {
        throw InternalContradiction("star_reduce: terminal graph " + to_graph6(current) +
                                    " is neither a cycle nor a partial dandelion");
    }
    return trace;
}

int evaluate_trace(const StarReductionTrace& trace) {
    if (const auto* c = std::get_if<CycleInfo>(&trace.terminal_form)) return smr_cycle(c->length()) + trace.s;
    return smr_partial_dandelion(trace.terminal, std::get<PartialDandelion>(trace.terminal_form)) + trace.s;
}

// ---- certificates -------------------------------------------------------

std::string to_string(SmrMethod m) {
    switch (m) {
        case SmrMethod::PathFormula: return "path-formula";
        case SmrMethod::CycleFormula: return "cycle-formula";
        case SmrMethod::TreeMatching: return "tree-matching";
        case SmrMethod::StarReduction: return "star-reduction";
        case SmrMethod::DandelionFormula: return "dandelion-formula";
        case SmrMethod::CutVertex: return "cut-vertex";
        case SmrMethod::ForestSum: return "forest-sum";
    }
    return "unknown";
}

namespace {

bool even_bare_cycle(const StarReductionTrace& t) {
    const auto* c = std::get_if<CycleInfo>(&t.terminal_form);
    return c != nullptr && c->length() % 2 == 0 && c->length() >= 4;
}

}  // namespace

int smr_unicyclic_formula(const Graph& u) {
    const StarReductionTrace trace = star_reduce(u);
    const int m = matching_number(u);
    return even_bare_cycle(trace) ? 2 * m - 2 : 2 * m;
}

SkewRankCertificate smr_unicyclic(const Graph& u) {
    SkewRankCertificate cert;
    cert.trace = star_reduce(u);
    cert.value = evaluate_trace(*cert.trace);
    if (cert.trace->steps.empty())
        cert.method = cert.trace->terminal_is_cycle() ? SmrMethod::CycleFormula : SmrMethod::DandelionFormula;
    else
        cert.method = SmrMethod::StarReduction;
    const int formula = smr_unicyclic_formula(u);
    if (formula != cert.value)
        throw InternalContradiction("smr_unicyclic: reduction gives " + std::to_string(cert.value) +
                                    " but the matching formula gives " + std::to_string(formula) + " for " +
                                    to_graph6(u));
    return cert;
}

bool smr_equals_max(const Graph& u) {
    const CycleInfo cycle = unique_cycle(u);
    const StarReductionTrace trace = star_reduce(u);
    const bool by_condition = cycle.length() % 2 == 1 || !trace.terminal_is_cycle();
    const bool by_value = smr_unicyclic(u).value == max_skew_rank(u);
    if (by_condition != by_value)
        throw InternalContradiction("smr_equals_max: condition and computed values disagree for " + to_graph6(u));
    return by_condition;
}

int smr_forest(const Graph& f) {
    int total = 0;
    for (const auto& comp : connected_components(f)) {
        const Graph c = induced_subgraph(f, comp).graph;
        switch (classify_shape(c).kind) {
            case ShapeKind::Tree: total += 2 * matching_number(c); break;
            case ShapeKind::Unicyclic: total += smr_unicyclic(c).value; break;
            default: throw UnsupportedShape("smr_forest: component " + to_graph6(c) + " is neither a tree nor unicyclic");
        }
    }
    return total;
}

namespace {

bool is_path_graph(const Graph& t) {
    for (Vertex v = 0; v < t.order(); ++v)
        if (t.degree(v) > 2) return false;
    return true;
}

// Branches G_i at v: v plus one component of g - v each.
std::vector<Graph> branches_at(const Graph& g, Vertex v) {
    const Vertex removed[] = {v};
    const Relabeled rest = delete_vertices(g, removed);
    std::vector<Graph> out;
    for (const auto& comp : connected_components(rest.graph)) {
        std::vector<Vertex> keep{v};
        for (Vertex w : comp) keep.push_back(rest.to_original[static_cast<std::size_t>(w)]);
        Relabeled b = induced_subgraph(g, keep);
        // put v at label 0 so callers can find it
        std::vector<Vertex> perm(static_cast<std::size_t>(b.graph.order()));
        const Vertex pos = b.from_original[static_cast<std::size_t>(v)];
        for (Vertex x = 0; x < b.graph.order(); ++x) perm[static_cast<std::size_t>(x)] = x < pos ? x + 1 : x;
        perm[static_cast<std::size_t>(pos)] = 0;
        out.push_back(permute(b.graph, perm));
    }
    return out;
}

int branch_value(const Graph& b) {
    const ShapeKind kind = classify_shape(b).kind;
    if (kind == ShapeKind::Tree) return 2 * matching_number(b);
    if (kind == ShapeKind::Unicyclic) return smr_unicyclic(b).value;
    throw UnsupportedShape("cut_vertex_reduce: branch " + to_graph6(b) + " is neither a tree nor unicyclic");
}

}  // namespace

SkewRankCertificate cut_vertex_reduce(const Graph& g, Vertex v) {
    if (!is_connected(g)) throw std::invalid_argument("cut_vertex_reduce: graph must be connected");
    if (!is_cut_vertex(g, v)) throw std::invalid_argument("cut_vertex_reduce: vertex " + std::to_string(v) +
                                                          " is not a cut vertex");
    SkewRankCertificate cert;
    cert.method = SmrMethod::CutVertex;
    bool some_spread = false;
    for (const Graph& b : branches_at(g, v)) {
        const Vertex zero[] = {0};
        const int without_v = smr_forest(delete_vertices(b, zero).graph);
        const int spread = branch_value(b) - without_v;
        if (spread == 2) some_spread = true;
        cert.value += without_v;
    }
    if (some_spread) cert.value += 2;
    return cert;
}

SkewRankCertificate min_skew_rank(const Graph& g) {
    const Shape shape = classify_shape(g);
    SkewRankCertificate cert;
    switch (shape.kind) {
        case ShapeKind::Tree:
            cert.value = 2 * matching_number(g);
            cert.method = SmrMethod::TreeMatching;
            if (is_path_graph(g)) {
                cert.method = SmrMethod::PathFormula;
                if (smr_path(g.order()) != cert.value)
                    throw InternalContradiction("path formula disagrees with the matching number");
            }
            return cert;
        case ShapeKind::Unicyclic: return smr_unicyclic(g);
        case ShapeKind::Forest: cert.value = smr_forest(g); cert.method = SmrMethod::ForestSum; return cert;
        case ShapeKind::Other: break;
    }
    const auto comps = connected_components(g);
    if (comps.size() > 1) {
        cert.method = SmrMethod::ForestSum;
        for (const auto& comp : comps) cert.value += min_skew_rank(induced_subgraph(g, comp).graph).value;
        return cert;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!is_cut_vertex(g, v)) continue;
        try {
            return cut_vertex_reduce(g, v);
        } catch (const UnsupportedShape&) {
        }
    }
    throw UnsupportedShape("not tree/unicyclic and no cut vertex with tree or unicyclic branches");
}

int skew_rank_spread(const Graph& g, Vertex v) {
    if (!g.has_vertex(v)) throw std::out_of_range("vertex out of range");
    const Vertex removed[] = {v};
    return min_skew_rank(g).value - min_skew_rank(delete_vertices(g, removed).graph).value;
}

std::optional<SkewIntMatrix> construct_min_witness(const Graph& g, std::uint64_t seed) {
    const Shape shape = classify_shape(g);
    if (shape.kind == ShapeKind::Tree || shape.kind == ShapeKind::Forest) return random_max_witness(g, kMaxWitnessAttempts, seed);
    if (shape.kind != ShapeKind::Unicyclic) return std::nullopt;

    const StarReductionTrace trace = star_reduce(g);
    const int value = evaluate_trace(trace);
    const Graph& core = trace.terminal;

    std::optional<SkewIntMatrix> core_witness;
    if (even_bare_cycle(trace)) {
        // Pfaffian of an even cycle is a sum of two matching products; one sign choice cancels them
        for (std::int64_t last : {1, -1}) {
            std::vector<std::int64_t> w(core.size(), 1);
            w.back() = last;
            SkewIntMatrix m = SkewIntMatrix::from_edge_weights(core, w);
            if (exact_rank(m) == smr_cycle(core.order())) {
                core_witness = std::move(m);
                break;
            }
        }
        if (!core_witness) core_witness = min_witness_search(core, smr_cycle(core.order()), seed);
    } else {
        core_witness = random_max_witness(core, kMaxWitnessAttempts, seed);
    }
    if (!core_witness) return std::nullopt;

    // weights on the core come from its witness, every other edge gets 1
    std::vector<Vertex> to_core(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < trace.terminal_to_original.size(); ++i)
        to_core[static_cast<std::size_t>(trace.terminal_to_original[i])] = static_cast<Vertex>(i);
    std::vector<std::int64_t> w;
    w.reserve(g.size());
    for (const Edge& e : g.edges()) {
        const Vertex a = to_core[static_cast<std::size_t>(e.u)], b = to_core[static_cast<std::size_t>(e.v)];
        w.push_back(a >= 0 && b >= 0 ? (*core_witness)(a, b) : 1);
    }
    SkewIntMatrix m = SkewIntMatrix::from_edge_weights(g, w);
    if (exact_rank(m) != value) return std::nullopt;
    return m;
}

}  // namespace skewrank
