#pragma once
// Rank-3 two-block signotopes viewed geometrically: crossing indices, the
// induced unique sink orientation, curve families, crossing posets, the
// arrangement <-> (USO, linear extensions) correspondence, and grid drawings.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "usogrid/blocksig.hpp"

namespace uso {

// A block colored arrangement: rank-3 signotope with blocks [r reds, b blues].
// Red pseudolines carry labels 1..r, blue ones r+1..r+b.
struct Arrangement2D {
  BlockSignotope base;

  static Arrangement2D checked(BlockSignotope base);
  int reds() const { return base.partition.sizes[0]; }
  int blues() const { return base.partition.sizes[1]; }
  int n() const { return reds() + blues(); }
};

// cri(p, q) = (x, y): x = number of blue lines p crosses before crossing q,
// y = number of red lines q crosses before crossing p. Derived from triple
// signs; for red p and blues q' < q, chi(p, q', q) = + means p crosses q'
// first (validated by the reversed-and-transposed identity and the counting
// acceptance test). Throws on wrong colors.
std::pair<int, int> crossing_index(const Arrangement2D& a, int p, int q);

// The USO of shape (b, r) whose refined index table is the cri table:
// rf(i, j) = cri(j, r+i). Equals reverse-and-transpose of
// induced_orientation(a.base).
GridOrientation uso_from_arrangement(const Arrangement2D& a);

// Blue and red curves through the b x r point grid (rows x columns, (0,0)
// top left), geometrically indexed: blue curve k contains point (k-1, 0),
// red curve k contains point (0, r-k).
struct CurveFamily {
  int nblue = 0, nred = 0;
  std::vector<std::vector<int>> blue_row_at_col;  // [k-1][col] = row
  std::vector<std::vector<int>> red_col_at_row;   // [k-1][row] = col
  std::vector<int> blue_source_row;               // [k-1] = generating USO row (1-based)
  std::vector<int> red_source_col;                // [k-1] = generating USO column
};

// Requires a two-dimensional USO; throws if two same-color curves would
// cross more than once (exactly the non-admissible case).
CurveFamily curves_from_uso(const GridOrientation& o);

// Number of order swaps between consecutive positions of two curves.
int curve_crossings(const std::vector<int>& f, const std::vector<int>& g);

// (blue poset, red poset) on geometric curve indices: i < j comparable iff
// the curves cross.
std::pair<Poset, Poset> crossing_posets(const CurveFamily& f);

// Inverse direction of the bijection: given an admissible USO and linear
// extensions of its crossing posets (total orders of geometric curve
// indices, as produced by linear_extensions), build an arrangement whose
// bichromatic signs are forced by the identification and whose monochromatic
// signs are the lexicographically first valid completion. Throws if the
// extensions do not extend the posets.
Arrangement2D arrangement_from(const GridOrientation& o, const std::vector<int>& ext_blue,
                               const std::vector<int>& ext_red);

// Read the identification off an arrangement: extension orders of the blue
// and red curves realized by the pseudoline labels.
std::pair<std::vector<int>, std::vector<int>> read_extensions(const Arrangement2D& a);

// Paper-style identification sequences: labels of (B_1..B_b) and (R_1..R_r).
std::pair<std::vector<int>, std::vector<int>> curve_identifications(const Arrangement2D& a);

// Grid drawing: each red-blue crossing placed on its cri grid point, red
// polylines threaded top to bottom, blue ones left to right.
struct GridDrawing {
  int rows = 0, cols = 0;  // b rows, r columns
  std::vector<std::vector<std::pair<int, int>>> crossing_at;  // [row][col] = (red p, blue q)
  std::vector<std::vector<int>> red_col_at_row;               // per red label 1..r
  std::vector<std::vector<int>> blue_row_at_col;              // per blue label (index q-r-1)
};

GridDrawing grid_drawing(const Arrangement2D& a);

// Fixed layout constants so output is deterministic and diffable.
struct SvgStyle {
  int cell = 48;
  int margin = 64;
  int stub = 28;
  int point_radius = 3;
  const char* red = "#c0392b";
  const char* blue = "#2471a3";
  const char* point = "#222222";
};

std::string emit_svg(const GridDrawing& d, const SvgStyle& style = {});

// Both sides of the counting identity for r red and b blue pseudolines:
// the number of monochromatic-flip classes of rank-3 two-block signotopes
// equals the sum, over per-axis classes of admissible (b, r)-USOs, of
// #ext(blue poset) * #ext(red poset); plus the check that rebuilding every
// signotope from its (USO, extensions) reading lands in its own flip class.
struct BijectionReport {
  long long flip_classes = 0;
  long long uso_classes = 0;
  long long admissible_labeled = 0;
  long long extension_sum = 0;
  long long roundtrip_failures = 0;

  bool ok() const { return flip_classes == extension_sum && roundtrip_failures == 0; }
};

BijectionReport bijection_report(int r, int b);

}  // namespace uso
