#pragma once
// Grid (rook's graph) orientations: sinks, the USO predicate, refined index,
// acyclicity, canonical forms, pattern containment, and USO enumeration.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace uso {

struct GridShape {
  std::vector<int> sizes;  // each >= 1

  int dims() const { return static_cast<int>(sizes.size()); }
  int dimension() const;  // number of sizes > 1
  int vertex_count() const;
  int edge_count() const;
  bool operator==(const GridShape&) const = default;
  auto operator<=>(const GridShape&) const = default;
};

// Immutable vertex/edge tables for a shape; built once and cached.
// Vertices are mixed-radix indices of their 1-based coordinate tuples (first
// coordinate most significant), so index order equals lexicographic order.
// Edges are listed per vertex in lexicographic order, then dimension, then
// the larger endpoint coordinate; dir bit 1 means tail = lex-smaller vertex.
struct Grid {
  GridShape shape;
  int nverts = 0;
  std::vector<std::vector<int>> coords;  // vertex -> coordinates
  struct Edge {
    int a, b, dim;  // a < b (vertex indices)
  };
  std::vector<Edge> edges;
  // per vertex: incident (edge index, other endpoint)
  std::vector<std::vector<std::pair<int, int>>> incident;

  int vertex_of(const std::vector<int>& coord) const;
  int neighbor(int v, int dim, int coord_value) const;  // vertex with coord[dim] replaced
};

const Grid& grid_for(const GridShape& shape);  // cached, thread-safe

struct GridOrientation {
  GridShape shape;
  std::vector<uint8_t> dir;  // per canonical edge: 1 = from lex-smaller to lex-larger

  bool operator==(const GridOrientation&) const = default;
  // true iff the edge with index e points away from vertex v (an endpoint)
  bool points_away(const Grid& g, int e, int v) const {
    return (g.edges[e].a == v) == (dir[e] != 0);
  }
};

// Nonempty coordinate subsets, one per axis (1-based values).
struct Subgrid {
  std::vector<std::vector<int>> factors;
};

Subgrid full_subgrid(const GridShape& shape);

// Vertices of S with no outgoing S-edge.
std::vector<int> sinks(const GridOrientation& o, const Subgrid& s);
std::vector<int> sources(const GridOrientation& o, const Subgrid& s);

// Every one of the prod(2^{n_i}-1) subgrids has exactly one sink. This is the
// definition, checked directly.
bool is_uso(const GridOrientation& o);

bool is_acyclic(const GridOrientation& o);

// Per-vertex out-degree split by edge dimension.
struct RefinedIndex {
  GridShape shape;
  std::vector<std::vector<int>> values;  // per vertex index
};

RefinedIndex refined_index(const GridOrientation& o);

// Orient u->v (u,v on a common line in dimension i) iff rf_i(u) > rf_i(v).
// Requires the values along every axis-parallel line to be a bijection onto
// {0..len-1}; throws std::invalid_argument otherwise.
GridOrientation uso_from_refined_index(const RefinedIndex& rf);

// Isomorphism-invariant encoding: axes sorted by size, then lexicographically
// minimal dir vector over coordinate permutations (between equal-size axes)
// composed with per-axis label permutations.
struct CanonicalForm {
  std::vector<int> sizes;
  std::vector<uint8_t> bits;

  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const GridOrientation& o);

// Minimal dir vector over per-axis label permutations only (axes fixed).
// This is the quotient Theorem-2 style counting uses.
std::vector<uint8_t> canonical_form_fixed_axes(const GridOrientation& o);

// A relabeling: axis i of the input becomes axis perm[i] of the output, and
// labels along input axis i map through relab[i] (1-based images).
struct Relabeling {
  std::vector<int> axis_perm;           // size r, 0-based images
  std::vector<std::vector<int>> relab;  // per input axis, 1-based label images
};

GridOrientation apply_relabeling(const GridOrientation& o, const Relabeling& g);

// All shape-preserving relabelings (axis permutations between equal sizes).
std::vector<Relabeling> shape_relabelings(const GridShape& shape, bool allow_axis_perm);

// Orientation induced on a subgrid, coordinates relabeled order-preservingly.
GridOrientation induced_on_subgrid(const GridOrientation& o, const Subgrid& s);

// Drop size-1 axes (they carry no edges).
GridOrientation squeeze(const GridOrientation& o);

struct PatternWitness {
  Subgrid where;
  Relabeling iso;  // on the squeezed subgrid, mapping it onto the squeezed pattern
};

// A subgrid on which the induced orientation is isomorphic to P (singleton
// axes disregarded on both sides), or nullopt.
std::optional<PatternWitness> contains_pattern(const GridOrientation& o, const GridOrientation& p);

// Streams all USOs of the shape via backtracking that prunes on every
// completed subgrid. Refuses shapes with more than max_edges edges by
// throwing std::invalid_argument (no silent truncation).
void enumerate_usos(const GridShape& shape, int max_edges,
                    const std::function<bool(const GridOrientation&)>& cb);

std::vector<GridOrientation> enumerate_usos(const GridShape& shape, int max_edges = 24);

// Splits the search tree at a fixed depth and runs `jobs` workers over the
// surviving prefixes. The callback must be safe to call concurrently; its
// return value still stops the whole enumeration. Visit order is unspecified,
// so aggregate order-insensitively.
void enumerate_usos_parallel(const GridShape& shape, int max_edges, int jobs,
                             const std::function<bool(const GridOrientation&)>& cb);

}  // namespace uso
