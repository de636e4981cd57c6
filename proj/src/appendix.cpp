#include "usogrid/appendix.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "usogrid/admissibility.hpp"

namespace uso {

GridShape cube_shape() { return GridShape{{2, 2, 2}}; }
BlockPartition cube_blocks() { return BlockPartition{{2, 2, 2}}; }

const std::array<Permutation, 48>& cube_table_order() {
  static const std::array<Permutation, 48> order = [] {
    // listing order of the published tables (identical across all three)
    constexpr int raw[48][6] = {
        {1, 2, 3, 4, 5, 6}, {1, 2, 3, 4, 6, 5}, {1, 2, 4, 3, 5, 6}, {1, 2, 4, 3, 6, 5},
        {1, 2, 5, 6, 3, 4}, {1, 2, 6, 5, 3, 4}, {1, 2, 5, 6, 4, 3}, {1, 2, 6, 5, 4, 3},
        {2, 1, 3, 4, 5, 6}, {2, 1, 3, 4, 6, 5}, {2, 1, 4, 3, 5, 6}, {2, 1, 4, 3, 6, 5},
        {2, 1, 5, 6, 3, 4}, {2, 1, 6, 5, 3, 4}, {2, 1, 5, 6, 4, 3}, {2, 1, 6, 5, 4, 3},
        {3, 4, 1, 2, 5, 6}, {3, 4, 1, 2, 6, 5}, {4, 3, 1, 2, 5, 6}, {4, 3, 1, 2, 6, 5},
        {5, 6, 1, 2, 3, 4}, {6, 5, 1, 2, 3, 4}, {5, 6, 1, 2, 4, 3}, {6, 5, 1, 2, 4, 3},
        {3, 4, 2, 1, 5, 6}, {3, 4, 2, 1, 6, 5}, {4, 3, 2, 1, 5, 6}, {4, 3, 2, 1, 6, 5},
        {5, 6, 2, 1, 3, 4}, {6, 5, 2, 1, 3, 4}, {5, 6, 2, 1, 4, 3}, {6, 5, 2, 1, 4, 3},
        {3, 4, 5, 6, 1, 2}, {3, 4, 6, 5, 1, 2}, {4, 3, 5, 6, 1, 2}, {4, 3, 6, 5, 1, 2},
        {5, 6, 3, 4, 1, 2}, {6, 5, 3, 4, 1, 2}, {5, 6, 4, 3, 1, 2}, {6, 5, 4, 3, 1, 2},
        {3, 4, 5, 6, 2, 1}, {3, 4, 6, 5, 2, 1}, {4, 3, 5, 6, 2, 1}, {4, 3, 6, 5, 2, 1},
        {5, 6, 3, 4, 2, 1}, {6, 5, 3, 4, 2, 1}, {5, 6, 4, 3, 2, 1}, {6, 5, 4, 3, 2, 1}};
    std::array<Permutation, 48> out;
    for (int i = 0; i < 48; ++i) out[i].images.assign(raw[i], raw[i] + 6);
    return out;
  }();
  return order;
}

namespace {

int label_of(const std::vector<int>& coord, int axis) { return 2 * axis + coord[axis]; }

std::vector<int> coord_of_labels(std::array<int, 3> labels) {
  std::sort(labels.begin(), labels.end());
  std::vector<int> coord(3);
  for (int i = 0; i < 3; ++i) {
    const int l = labels[i];
    if (l != 2 * i + 1 && l != 2 * i + 2)
      throw std::invalid_argument("cube labels must pick one element per block");
    coord[i] = l - 2 * i;
  }
  return coord;
}

}  // namespace

GridOrientation permute_cube(const GridOrientation& o, const Permutation& pi) {
  if (o.shape != cube_shape()) throw std::invalid_argument("permute_cube: need a (2,2,2) orientation");
  if (!in_hyperoctahedral_group(pi))
    throw std::invalid_argument("permute_cube: permutation not in the hyperoctahedral group");
  const Grid& g = grid_for(o.shape);
  GridOrientation res{o.shape, std::vector<uint8_t>(g.edges.size(), 0)};
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    std::array<int, 3> la{}, lb{};
    for (int i = 0; i < 3; ++i) {
      la[i] = pi(label_of(g.coords[edge.a], i));
      lb[i] = pi(label_of(g.coords[edge.b], i));
    }
    const int na = g.vertex_of(coord_of_labels(la));
    const int nb = g.vertex_of(coord_of_labels(lb));
    const int head = o.dir[e] ? nb : na;
    const int lo = std::min(na, nb), hi = std::max(na, nb);
    int eid = -1;
    for (auto [cand, other] : g.incident[lo])
      if (other == hi) {
        eid = cand;
        break;
      }
    res.dir[eid] = (head == hi) ? 1 : 0;
  }
  return res;
}

PartialSignAssignment constraints_from_cube(const GridOrientation& o) {
  if (o.shape != cube_shape())
    throw std::invalid_argument("constraints_from_cube: need a (2,2,2) orientation");
  const Grid& g = grid_for(o.shape);
  PartialSignAssignment p;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    KSubset sub;
    for (int i = 0; i < 3; ++i) sub.push_back(label_of(g.coords[edge.a], i));
    sub.push_back(label_of(g.coords[edge.b], edge.dim));
    std::sort(sub.begin(), sub.end());
    // edge.a is lex-smaller, so its label in the edge dimension is c < c'
    p.signs[subset_rank(6, sub)] = o.dir[e] ? 1 : -1;
  }
  return p;
}

std::optional<ViolationBody> find_violating_tuple(const PartialSignAssignment& p) {
  for (const auto& a : k_subsets(6, 5)) {
    SignSequence seq;
    for (int i = 1; i <= 5; ++i) seq.push_back(p.sign(omit_ith(a, i)));
    if (min_sign_changes(seq) >= 2) return ViolationBody{a, seq};
  }
  return std::nullopt;
}

namespace {

const std::set<std::vector<uint8_t>>& induced_cube_set() {
  static std::once_flag flag;
  static std::set<std::vector<uint8_t>> codes;
  std::call_once(flag, [] {
    enumerate_signotopes(6, 4, [&](const Signotope& chi) {
      codes.insert(induced_orientation(BlockSignotope::checked(chi, cube_blocks())).dir);
      return true;
    });
  });
  return codes;
}

}  // namespace

bool not_induced_exhaustive(const GridOrientation& o) {
  if (o.shape != cube_shape())
    throw std::invalid_argument("not_induced_exhaustive: need a (2,2,2) orientation");
  return !induced_cube_set().count(o.dir);
}

bool not_induced_any_relabeling(const GridOrientation& o) {
  const auto& codes = induced_cube_set();
  for (const auto& pi : hyperoctahedral_group())
    if (codes.count(permute_cube(o, pi).dir)) return false;
  return true;
}

std::vector<ViolationRecord> reproduce_table(const GridOrientation& base) {
  std::vector<ViolationRecord> rows;
  rows.reserve(48);
  for (const auto& pi : cube_table_order()) {
    const auto body = find_violating_tuple(constraints_from_cube(permute_cube(base, pi)));
    if (!body)
      throw std::runtime_error("reproduce_table: a relabeling admits no violating 5-tuple");
    rows.push_back({pi, body->subset, body->sequence});
  }
  return rows;
}

std::string format_table(const std::vector<ViolationRecord>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    out << '(';
    for (int i = 0; i < row.pi.n(); ++i) {
      if (i) out << ", ";
      out << row.pi.images[i];
    }
    out << ") \xE2\x86\x92 \xCF\x87(";  // " → χ("
    for (int x : row.subset) out << x;
    out << ") = " << sequence_string(row.sequence) << '\n';
  }
  return out.str();
}

namespace {

std::optional<GridOrientation> pin_one(const std::vector<GridOrientation>& candidates,
                                       const std::string& golden) {
  std::optional<GridOrientation> best;
  for (const auto& cand : candidates) {
    std::vector<ViolationRecord> rows;
    try {
      rows = reproduce_table(cand);
    } catch (const std::runtime_error&) {
      continue;
    }
    if (format_table(rows) != golden) continue;
    if (!best || cand.dir < best->dir) best = cand;
  }
  return best;
}

std::vector<GridOrientation> relabelings_of(const GridOrientation& o) {
  std::set<std::vector<uint8_t>> seen;
  std::vector<GridOrientation> out;
  for (const auto& pi : hyperoctahedral_group()) {
    GridOrientation r = permute_cube(o, pi);
    if (seen.insert(r.dir).second) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

PinnedCubes pin_base_labelings(const std::string& table_nac1, const std::string& table_nac2,
                               const std::string& table_adm_not_induced) {
  const PatternCatalog& cat = pattern_catalog();
  auto nac1 = pin_one(relabelings_of(cat.nac1), table_nac1);
  auto nac2 = pin_one(relabelings_of(cat.nac2), table_nac2);
  if (!nac1 || !nac2)
    throw std::runtime_error("pin_base_labelings: no relabeling of the derived cube classes "
                             "reproduces the given tables");

  std::vector<GridOrientation> adm_candidates;
  enumerate_usos(cube_shape(), 24, [&](const GridOrientation& o) {
    if (is_admissible(o) && not_induced_exhaustive(o)) adm_candidates.push_back(o);
    return true;
  });
  auto adm = pin_one(adm_candidates, table_adm_not_induced);
  if (!adm)
    throw std::runtime_error("pin_base_labelings: no admissible not-induced cube reproduces "
                             "the third table");
  return PinnedCubes{std::move(*nac1), std::move(*nac2), std::move(*adm)};
}

}  // namespace uso
