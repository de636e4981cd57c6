#pragma once
// Holt-Klee admissibility via vertex-disjoint dipath counting, the derived
// forbidden-pattern catalog, and the pattern criterion for dimension <= 3.

#include "usogrid/grid.hpp"

namespace uso {

// Maximum number of directed source->sink paths in S sharing no internal
// vertex (unit-vertex-capacity max flow). Requires a unique source and a
// unique sink in S; throws std::invalid_argument otherwise.
int max_disjoint_dipaths(const GridOrientation& o, const Subgrid& s);

// Holt-Klee: every subgrid of sizes (n_1',...,n_r') admits sum(n_i') - r
// internally disjoint source->sink dipaths. Requires is_uso(o); line
// subgrids are transitive tournaments and always meet the bound, so only
// subgrids of dimension >= 2 are flow-checked.
bool is_admissible(const GridOrientation& o);

// Forbidden patterns, derived (never transcribed from figures):
//   dt    unique acyclic non-admissible USO class of the smallest
//         two-dimensional shape containing one,
//   nac1, nac2
//         the two acyclic non-admissible USO classes of the 3-cube; nac1 is
//         the class with the lexicographically larger canonical encoding
//         (the naming that matches the violation-table pinning).
struct PatternCatalog {
  GridOrientation dt;
  GridOrientation nac1;
  GridOrientation nac2;
};

// Runs the derivation; throws std::runtime_error if the expected cardinality
// (one DT class, two cube classes) does not hold.
PatternCatalog derive_pattern_catalog();

const PatternCatalog& pattern_catalog();  // derived once, cached

// Pattern-based criterion: an acyclic USO of dimension <= 3 is admissible
// iff it contains none of DT, NAC1, NAC2. Preconditions checked.
bool is_admissible_dim3(const GridOrientation& o);

}  // namespace uso
