#pragma once

#include <map>

#include "skewrank/graph.hpp"

namespace skewrank {

// Fixture builders. The spine or cycle comes first as vertices 0..n-1
// (v_1..v_n), then appended vertices in the order their anchors appear.
// Indices in the maps are 1-based positions v_i.

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);

/// Path v_1..v_n with legs[i] leaves on v_i, 2 <= i <= n-1.
Graph centipede(int n, const std::map<int, int>& legs);

/// Cycle C_n with one leaf on every vertex.
Graph n_sun(int n);

/// Cycle C_n with attachments[i] >= 1 leaves on v_i; attachments nonempty.
Graph dandelion(int n, const std::map<int, int>& attachments);

/// P_n plus vertices w = n and z = n + 1 with edges {v_j,w}, {w,v_{j+1}}, {v_i,z};
/// the four variants restrict the parities and ranges of j and i. Throws
/// std::invalid_argument naming the violated constraint.
Graph pineapple_graph(int variant, int n, int j, int i);

/// Empty string if (variant, n, j, i) is admissible, else the violated constraint.
std::string pineapple_constraint_violation(int variant, int n, int j, int i);

}  // namespace skewrank
