#pragma once
// Reproduction of the violation tables: hyperoctahedral relabelings of cube
// orientations on the blocks {1,2}|{3,4}|{5,6}, the partial sign constraints
// a cube orientation imposes on rank-4 maps, violating 5-tuples, and the
// exhaustive not-induced oracle.

#include <array>
#include <optional>
#include <string>

#include "usogrid/blocksig.hpp"
#include "usogrid/signotope.hpp"

namespace uso {

// Cube orientations here are shape (2,2,2) orientations; coordinate value v
// of axis i stands for label 2*i + v of [6].
GridShape cube_shape();
BlockPartition cube_blocks();  // (2,2,2)

// Fixed listing order of the 48 relabelings used by the violation tables.
const std::array<Permutation, 48>& cube_table_order();

// Pushforward relabeling: label x becomes pi(x). Requires pi in the
// hyperoctahedral group (block structure preserved).
GridOrientation permute_cube(const GridOrientation& o, const Permutation& pi);

// Partial sign map on the 15 4-subsets of [6]: the 12 subsets containing
// exactly one full block are forced by the corresponding edge direction; the
// 3 subsets containing two full blocks stay undetermined.
struct PartialSignAssignment {
  std::array<Sign, 15> signs{};  // canonical 4-subset order; 0 = undetermined

  Sign sign(const KSubset& sub) const { return signs[subset_rank(6, sub)]; }
};

PartialSignAssignment constraints_from_cube(const GridOrientation& o);

// Lexicographically first 5-subset whose sequence has at least two sign
// changes however the undetermined entries are completed, with its sequence.
struct ViolationBody {
  KSubset subset;
  SignSequence sequence;
};

std::optional<ViolationBody> find_violating_tuple(const PartialSignAssignment& p);

// True iff no rank-4 signotope on [6] induces o (with the cube blocks);
// computed by a memoized sweep of all rank-4 signotopes.
bool not_induced_exhaustive(const GridOrientation& o);

// Same question for every hyperoctahedral relabeling of o. The induced set
// is not closed under relabelings, so the two answers can differ.
bool not_induced_any_relabeling(const GridOrientation& o);

struct ViolationRecord {
  Permutation pi;
  KSubset subset;
  SignSequence sequence;
};

// One record per group element, in cube_table_order(). Throws
// std::runtime_error if some relabeling admits no violating tuple.
std::vector<ViolationRecord> reproduce_table(const GridOrientation& base);

// Text format of a table, one row per line:
//   (1, 2, 3, 4, 5, 6) -> chi(23456) = *-+--
// with the arrow and chi rendered as UTF-8.
std::string format_table(const std::vector<ViolationRecord>& rows);

struct PinnedCubes {
  GridOrientation nac1;
  GridOrientation nac2;
  GridOrientation adm_not_induced;  // admissible cube not induced by any rank-4 signotope
};

// Solve for the base labelings whose reproduce_table output matches the
// given table texts byte for byte. Candidates come from the derived pattern
// catalog (tables 1, 2) and from the exhaustively-filtered admissible
// not-induced cubes (table 3); ties broken by smallest orientation encoding.
// Throws std::runtime_error when a table matches no candidate.
PinnedCubes pin_base_labelings(const std::string& table_nac1, const std::string& table_nac2,
                               const std::string& table_adm_not_induced);

}  // namespace uso
