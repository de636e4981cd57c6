#pragma once
// Block signotopes: the induced grid orientation, the refined-index formula,
// and the acyclic digraph on (rank-1)-subsets.

#include <utility>
#include <vector>

#include "usogrid/grid.hpp"
#include "usogrid/signotope.hpp"

namespace uso {

// Consecutive partition of [n], stored as block sizes only; consecutiveness
// holds by construction.
struct BlockPartition {
  std::vector<int> sizes;

  int n() const;
  int count() const { return static_cast<int>(sizes.size()); }
  std::vector<std::vector<int>> blocks() const;  // labels per block
  bool operator==(const BlockPartition&) const = default;
};

// A rank-(r+1) signotope paired with an r-block partition of its ground set.
struct BlockSignotope {
  Signotope chi;
  BlockPartition partition;

  static BlockSignotope checked(Signotope chi, BlockPartition partition);
  GridShape grid_shape() const { return GridShape{partition.sizes}; }
};

// The orientation O_chi of the grid C_1 x ... x C_r: the edge between
// vertices differing only in block i, coordinates c < c', points from c to
// c' iff the sign of the assembled (r+1)-subset is +.
GridOrientation induced_orientation(const BlockSignotope& b);

// The displayed index formula: rf_i = #{c in C_i : c > c_i, sign +} +
// #{c in C_i : c < c_i, sign -}. vertex_labels holds one label per block.
std::vector<int> rf_chi(const BlockSignotope& b, const std::vector<int>& vertex_labels);

// Digraph on the (rank-1)-subsets of [n]; R and R' are adjacent when they
// share rank-2 elements, oriented from the lexicographically smaller to the
// larger set iff chi(R u R') = +.
struct GChiGraph {
  std::vector<KSubset> vertices;
  std::vector<std::pair<int, int>> arcs;  // vertex indices

  bool acyclic() const;
};

GChiGraph g_chi_graph(const Signotope& chi);

// Restriction to the surviving labels followed by contraction on all
// singleton factors: a block signotope of rank dim(S)+1 inducing on its grid
// the orientation B induces on S. Throws for zero-dimensional subgrids.
BlockSignotope subgrid_block_signotope(const BlockSignotope& b, const Subgrid& s);

}  // namespace uso
