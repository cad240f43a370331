#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewrank/graph.hpp"

namespace skewrank {

/// A tree seen as a spine with leaves (legs) hanging from interior spine
/// vertices (joints). Joint indices are 1-based spine positions.
struct Centipede {
    Path spine;
    std::map<int, std::vector<Vertex>> legs;

    std::vector<int> joints() const;
    bool regular() const;  // no two consecutive joints
};

/// Centipede structure of t relative to `spine`, or nullopt if some off-spine
/// vertex is not a leaf on an interior spine vertex. Throws
/// std::invalid_argument if `spine` is not a path of t.
std::optional<Centipede> recognize_centipede(const Graph& t, const Path& spine);

/// Readings of two clauses of the even unicyclic theorem whose printed form is
/// self-inconsistent. The amended readings are the defaults.
struct TheoremReadings {
    bool clause_4f_literal = false;  // "j = n" rather than j = n - 2
    bool clause_6f_literal = false;  // include v_{j+2}, v_{j+3} in the degree-2 ranges
};

enum class Quantifier { Existential, Universal };

struct ClassificationVerdict {
    bool holds = false;
    /// Violated clause when !holds; the rule that applied when holds.
    std::string clause;
    std::string explanation;
    int n = 0;  // vertices on a diametrical path
    std::optional<Path> spine;  // oriented path the verdict refers to
    std::optional<Centipede> centipede;
    std::optional<int> j;  // first cycle position on the spine
    std::vector<Vertex> cycle_on_path;
    std::vector<Vertex> cycle_off_path;
};

/// Tree theorem predicate for one oriented diametrical path.
ClassificationVerdict tree_predicate(const Graph& t, const Path& spine);

/// Unicyclic theorem predicate for one oriented diametrical path. For
/// |spine| <= 4 this is the direct comparison.
ClassificationVerdict unicyclic_predicate(const Graph& u, const Path& spine, const TheoremReadings& readings = {});

/// Predicate aggregated over all diametrical paths in both orientations.
/// Universal: holds iff it holds on every oriented diametrical path.
ClassificationVerdict tree_theorem(const Graph& t, Quantifier q = Quantifier::Universal);
ClassificationVerdict unicyclic_theorem(const Graph& u, Quantifier q = Quantifier::Universal,
                                        const TheoremReadings& readings = {});

/// mr^-(g) == smr_path(diam(g) + 1), computed directly.
bool reaches_path_bound(const Graph& g);

/// Theorem verdict, checked against reaches_path_bound. Throws
/// InternalContradiction on disagreement; std::invalid_argument on wrong shape.
ClassificationVerdict tree_classification(const Graph& t);
ClassificationVerdict unicyclic_classification(const Graph& u);

/// Empty if the necessary conditions for mr^-(u) == mr^-(P) hold for this
/// diametrical path (off-path cycle vertices have degree 2, k in {3,4,6},
/// on/off counts match k); otherwise a description of the failure.
std::string necessary_conditions_violation(const Graph& u, const Path& spine);

}  // namespace skewrank
