#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skewrank/graph.hpp"
#include "skewrank/witness.hpp"

namespace skewrank {

// ---- closed forms -------------------------------------------------------

/// mr^-(P_n): n for even n, n - 1 for odd n. Throws for n < 1.
int smr_path(int n);

/// mr^-(C_n): n - 2 for even n, n - 1 for odd n. Throws for n < 3.
int smr_cycle(int n);

/// MR^-(g) = 2 match(g).
int max_skew_rank(const Graph& g);

/// mr^- of a forest: 2 match. Throws UnsupportedShape if g has a cycle.
int smr_tree(const Graph& t);

// ---- pendant stars and the reduction ------------------------------------

/// A center of degree >= 2 together with the leaves hanging from it; deleting
/// the center leaves those leaves isolated plus one connected unicyclic graph.
struct PendantStar {
    Vertex center = -1;
    std::vector<Vertex> leaves;

    friend bool operator==(const PendantStar&, const PendantStar&) = default;
};

/// Checks the pendant-star definition at `center` directly.
std::optional<PendantStar> pendant_star_at(const Graph& u, Vertex center);

/// The pendant star with the smallest center label, if any.
/// Throws UnsupportedShape unless u is connected unicyclic.
std::optional<PendantStar> find_pendant_star(const Graph& u);

/// A cycle with p_i >= 1 leaves appended at each vertex of a nonempty subset V'.
struct PartialDandelion {
    CycleInfo cycle;
    std::map<Vertex, std::vector<Vertex>> attachments;  // v in V' -> its leaves

    int attached_count() const { return static_cast<int>(attachments.size()); }
    bool is_sun() const;          // every p_i = 1 and V' is the whole cycle
    bool is_partial_sun() const;  // every p_i = 1 and V' is a proper subset
};

std::optional<PartialDandelion> recognize_partial_dandelion(const Graph& g);

/// 2|V'| + 2 match(U - V').
int smr_partial_dandelion(const Graph& u, const PartialDandelion& d);

struct ReductionStep {
    PendantStar star;                  // labels of the original graph
    Graph remaining;                   // graph after deleting the star
    std::vector<Vertex> to_original;   // labels of `remaining` in the original graph
    int s = 0;                         // accumulated contribution after this step
};

struct StarReductionTrace {
    std::vector<ReductionStep> steps;
    int s = 0;
    Graph terminal;                       // star-reduced form U_*
    std::vector<Vertex> terminal_to_original;
    std::variant<CycleInfo, PartialDandelion> terminal_form;  // in terminal's labels

    bool terminal_is_cycle() const { return std::holds_alternative<CycleInfo>(terminal_form); }
};

/// Chooses which pendant star to remove next; receives the current graph.
using StarChooser = std::function<std::optional<PendantStar>(const Graph&)>;

/// Runs the pendant-star reduction. Throws InternalContradiction if the
/// terminal graph is neither a bare cycle nor a partial dandelion.
StarReductionTrace star_reduce(const Graph& u);
StarReductionTrace star_reduce(const Graph& u, const StarChooser& choose);

/// Chooser picking uniformly among all pendant stars; for order-independence checks.
StarChooser random_star_chooser(std::uint64_t seed);

/// mr^- of the star-reduced form plus the accumulated s.
int evaluate_trace(const StarReductionTrace& trace);

// ---- certificates -------------------------------------------------------

enum class SmrMethod { PathFormula, CycleFormula, TreeMatching, StarReduction, DandelionFormula, CutVertex, ForestSum };

std::string to_string(SmrMethod m);

struct SkewRankCertificate {
    int value = 0;
    SmrMethod method = SmrMethod::TreeMatching;
    std::optional<StarReductionTrace> trace;
    std::optional<SkewIntMatrix> upper_witness;
    std::optional<int> lower_bound;
};

/// mr^- of a connected unicyclic graph by star reduction, cross-checked against
/// smr_unicyclic_formula (InternalContradiction on disagreement).
SkewRankCertificate smr_unicyclic(const Graph& u);

/// 2 match(u) - 2 if U_* is an even cycle, 2 match(u) otherwise.
int smr_unicyclic_formula(const Graph& u);

/// mr^-(u) == MR^-(u), decided by "k odd or U_* is not the bare cycle";
/// cross-checked numerically.
bool smr_equals_max(const Graph& u);

/// Sum over components; every component must be a tree or connected unicyclic.
int smr_forest(const Graph& f);

/// mr^- of any graph this library can evaluate: components that are trees or
/// unicyclic, or connected graphs with a cut vertex whose branches are. Throws
/// UnsupportedShape otherwise.
SkewRankCertificate min_skew_rank(const Graph& g);

/// mr^-(g) - mr^-(g - v), 0 or 2.
int skew_rank_spread(const Graph& g, Vertex v);

/// mr^-(g) from the branches at cut vertex v. Throws std::invalid_argument if
/// v is not a cut vertex, UnsupportedShape if a branch is neither a tree nor
/// connected unicyclic.
SkewRankCertificate cut_vertex_reduce(const Graph& g, Vertex v);

/// Constructs a matrix of rank mr^-(u) for a tree or connected unicyclic graph
/// by extending a witness of the star-reduced form; rank verified exactly.
std::optional<SkewIntMatrix> construct_min_witness(const Graph& g, std::uint64_t seed = 1);

}  // namespace skewrank
