#pragma once

namespace skewrank {

/// Edge-count cap for a brute-force routine: `default_cap`, unless the
/// SKEWRANK_ORACLE_CAP environment variable holds a positive integer.
int oracle_edge_cap(int default_cap);

}  // namespace skewrank
