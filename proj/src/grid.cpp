#include "usogrid/grid.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace uso {

int GridShape::dimension() const {
  int d = 0;
  for (int s : sizes)
    if (s > 1) ++d;
  return d;
}

int GridShape::vertex_count() const {
  int v = 1;
  for (int s : sizes) v *= s;
  return v;
}

int GridShape::edge_count() const {
  int total = 0;
  const int nv = vertex_count();
  for (int s : sizes)
    if (s > 1) total += nv / s * (s * (s - 1) / 2);
  return total;
}

int Grid::vertex_of(const std::vector<int>& coord) const {
  int idx = 0;
  for (int i = 0; i < shape.dims(); ++i) idx = idx * shape.sizes[i] + (coord[i] - 1);
  return idx;
}

int Grid::neighbor(int v, int dim, int coord_value) const {
  int stride = 1;
  for (int i = shape.dims() - 1; i > dim; --i) stride *= shape.sizes[i];
  return v + (coord_value - coords[v][dim]) * stride;
}

namespace {

std::unique_ptr<Grid> build_grid(const GridShape& shape) {
  for (int s : shape.sizes)
    if (s < 1) throw std::invalid_argument("GridShape: sizes must be >= 1");
  auto g = std::make_unique<Grid>();
  g->shape = shape;
  g->nverts = shape.vertex_count();
  g->coords.resize(g->nverts);
  const int r = shape.dims();
  for (int v = 0; v < g->nverts; ++v) {
    std::vector<int> c(r);
    int rest = v;
    for (int i = r - 1; i >= 0; --i) {
      c[i] = rest % shape.sizes[i] + 1;
      rest /= shape.sizes[i];
    }
    g->coords[v] = std::move(c);
  }
  g->incident.resize(g->nverts);
  for (int v = 0; v < g->nverts; ++v) {
    for (int i = 0; i < r; ++i) {
      for (int b = g->coords[v][i] + 1; b <= shape.sizes[i]; ++b) {
        const int w = g->neighbor(v, i, b);
        const int e = static_cast<int>(g->edges.size());
        g->edges.push_back({v, w, i});
        g->incident[v].push_back({e, w});
        g->incident[w].push_back({e, v});
      }
    }
  }
  return g;
}

std::mutex g_grid_mutex;
std::map<std::vector<int>, std::unique_ptr<Grid>>& grid_cache() {
  static std::map<std::vector<int>, std::unique_ptr<Grid>> cache;
  return cache;
}

// Per-shape subgrid tables: vertex lists and local incident-edge lists, plus
// buckets of subgrids by their largest edge index (for enumeration pruning).
struct SubgridTables {
  struct SG {
    std::vector<std::vector<int>> factors;
    std::vector<int> verts;
    // per local vertex: (edge index, vertex is the lex-smaller endpoint)
    std::vector<std::vector<std::pair<int, uint8_t>>> vert_edges;
    int last_edge = -1;
  };
  std::vector<SG> subgrids;
  std::vector<std::vector<int>> by_last_edge;  // per edge index: subgrid ids
};

std::mutex g_sub_mutex;
std::map<std::vector<int>, std::unique_ptr<SubgridTables>>& sub_cache() {
  static std::map<std::vector<int>, std::unique_ptr<SubgridTables>> cache;
  return cache;
}

void fill_subgrid(const Grid& g, SubgridTables::SG& sg) {
  const int r = g.shape.dims();
  // vertex set as product of factors
  std::vector<int> idx(r, 0);
  while (true) {
    std::vector<int> coord(r);
    for (int i = 0; i < r; ++i) coord[i] = sg.factors[i][idx[i]];
    sg.verts.push_back(g.vertex_of(coord));
    int i = r - 1;
    while (i >= 0 && idx[i] + 1 == static_cast<int>(sg.factors[i].size())) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  std::vector<char> inside(g.nverts, 0);
  for (int v : sg.verts) inside[v] = 1;
  sg.vert_edges.resize(sg.verts.size());
  for (size_t li = 0; li < sg.verts.size(); ++li) {
    const int v = sg.verts[li];
    for (auto [e, w] : g.incident[v]) {
      if (!inside[w]) continue;
      sg.vert_edges[li].push_back({e, static_cast<uint8_t>(g.edges[e].a == v)});
      sg.last_edge = std::max(sg.last_edge, e);
    }
  }
}

const SubgridTables& subgrids_for(const GridShape& shape) {
  std::lock_guard<std::mutex> lock(g_sub_mutex);
  auto& cache = sub_cache();
  auto it = cache.find(shape.sizes);
  if (it != cache.end()) return *it->second;

  const Grid& g = grid_for(shape);
  auto tables = std::make_unique<SubgridTables>();
  const int r = shape.dims();
  // enumerate per-axis nonempty subsets via bitmask counters
  std::vector<int> mask(r, 1);
  while (true) {
    SubgridTables::SG sg;
    sg.factors.resize(r);
    for (int i = 0; i < r; ++i)
      for (int b = 0; b < shape.sizes[i]; ++b)
        if (mask[i] >> b & 1) sg.factors[i].push_back(b + 1);
    fill_subgrid(g, sg);
    tables->subgrids.push_back(std::move(sg));
    int i = r - 1;
    while (i >= 0 && mask[i] + 1 == (1 << shape.sizes[i])) mask[i--] = 1;
    if (i < 0) break;
    ++mask[i];
  }
  tables->by_last_edge.assign(std::max(1, static_cast<int>(g.edges.size())), {});
  for (size_t s = 0; s < tables->subgrids.size(); ++s) {
    const int le = tables->subgrids[s].last_edge;
    if (le >= 0) tables->by_last_edge[le].push_back(static_cast<int>(s));
  }
  auto& ref = *tables;
  cache.emplace(shape.sizes, std::move(tables));
  return ref;
}

// exactly-one-sink test on a fully oriented subgrid
int sink_count(const std::vector<uint8_t>& dir, const SubgridTables::SG& sg, int cap) {
  int count = 0;
  for (size_t li = 0; li < sg.verts.size(); ++li) {
    bool sink = true;
    for (auto [e, is_a] : sg.vert_edges[li]) {
      if ((dir[e] != 0) == (is_a != 0)) {  // points away from this vertex
        sink = false;
        break;
      }
    }
    if (sink && ++count >= cap) return count;
  }
  return count;
}

}  // namespace

const Grid& grid_for(const GridShape& shape) {
  std::lock_guard<std::mutex> lock(g_grid_mutex);
  auto& cache = grid_cache();
  auto it = cache.find(shape.sizes);
  if (it == cache.end()) it = cache.emplace(shape.sizes, build_grid(shape)).first;
  return *it->second;
}

Subgrid full_subgrid(const GridShape& shape) {
  Subgrid s;
  s.factors.resize(shape.dims());
  for (int i = 0; i < shape.dims(); ++i)
    for (int b = 1; b <= shape.sizes[i]; ++b) s.factors[i].push_back(b);
  return s;
}

namespace {

void check_subgrid(const GridShape& shape, const Subgrid& s) {
  if (static_cast<int>(s.factors.size()) != shape.dims())
    throw std::invalid_argument("Subgrid: factor count != dims");
  for (int i = 0; i < shape.dims(); ++i) {
    if (s.factors[i].empty()) throw std::invalid_argument("Subgrid: empty factor");
    for (int b : s.factors[i])
      if (b < 1 || b > shape.sizes[i]) throw std::invalid_argument("Subgrid: factor out of range");
  }
}

std::vector<int> subgrid_vertices(const Grid& g, const Subgrid& s) {
  std::vector<int> verts;
  const int r = g.shape.dims();
  std::vector<int> idx(r, 0);
  while (true) {
    std::vector<int> coord(r);
    for (int i = 0; i < r; ++i) coord[i] = s.factors[i][idx[i]];
    verts.push_back(g.vertex_of(coord));
    int i = r - 1;
    while (i >= 0 && idx[i] + 1 == static_cast<int>(s.factors[i].size())) idx[i--] = 0;
    if (i < 0) break;
    ++idx[i];
  }
  return verts;
}

std::vector<int> extremes(const GridOrientation& o, const Subgrid& s, bool want_sinks) {
  check_subgrid(o.shape, s);
  const Grid& g = grid_for(o.shape);
  std::vector<char> inside(g.nverts, 0);
  std::vector<int> verts = subgrid_vertices(g, s);
  for (int v : verts) inside[v] = 1;
  std::vector<int> out;
  for (int v : verts) {
    bool ok = true;
    for (auto [e, w] : g.incident[v]) {
      if (!inside[w]) continue;
      const bool away = o.points_away(g, e, v);
      if (away == want_sinks) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(v);
  }
  return out;
}

}  // namespace

std::vector<int> sinks(const GridOrientation& o, const Subgrid& s) { return extremes(o, s, true); }
std::vector<int> sources(const GridOrientation& o, const Subgrid& s) { return extremes(o, s, false); }

bool is_uso(const GridOrientation& o) {
  const SubgridTables& tables = subgrids_for(o.shape);
  for (const auto& sg : tables.subgrids)
    if (sink_count(o.dir, sg, 2) != 1) return false;
  return true;
}

bool is_acyclic(const GridOrientation& o) {
  const Grid& g = grid_for(o.shape);
  std::vector<int> indeg(g.nverts, 0);
  for (size_t e = 0; e < g.edges.size(); ++e) indeg[o.dir[e] ? g.edges[e].b : g.edges[e].a]++;
  std::vector<int> stack;
  for (int v = 0; v < g.nverts; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (auto [e, w] : g.incident[v]) {
      if (!o.points_away(g, e, v)) continue;
      if (--indeg[w] == 0) stack.push_back(w);
    }
  }
  return seen == g.nverts;
}

RefinedIndex refined_index(const GridOrientation& o) {
  const Grid& g = grid_for(o.shape);
  RefinedIndex rf{o.shape, std::vector<std::vector<int>>(g.nverts, std::vector<int>(o.shape.dims(), 0))};
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    const int tail = o.dir[e] ? edge.a : edge.b;
    rf.values[tail][edge.dim]++;
  }
  return rf;
}

GridOrientation uso_from_refined_index(const RefinedIndex& rf) {
  const Grid& g = grid_for(rf.shape);
  const int r = rf.shape.dims();
  // precondition: along every line, dimension-i values are a bijection onto {0..len-1}
  for (int i = 0; i < r; ++i) {
    const int len = rf.shape.sizes[i];
    for (int v = 0; v < g.nverts; ++v) {
      if (g.coords[v][i] != 1) continue;  // one check per line
      std::vector<char> seen(len, 0);
      for (int b = 1; b <= len; ++b) {
        const int val = rf.values[g.neighbor(v, i, b)][i];
        if (val < 0 || val >= len || seen[val])
          throw std::invalid_argument("uso_from_refined_index: line values not bijective");
        seen[val] = 1;
      }
    }
  }
  GridOrientation o{rf.shape, std::vector<uint8_t>(g.edges.size(), 0)};
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    o.dir[e] = rf.values[edge.a][edge.dim] > rf.values[edge.b][edge.dim] ? 1 : 0;
  }
  return o;
}

std::vector<Relabeling> shape_relabelings(const GridShape& shape, bool allow_axis_perm) {
  const int r = shape.dims();
  std::vector<Relabeling> out;
  std::vector<int> axis(r);
  std::iota(axis.begin(), axis.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i) {
      if (!allow_axis_perm && axis[i] != i) ok = false;
      if (shape.sizes[axis[i]] != shape.sizes[i]) ok = false;
    }
    if (!ok) continue;
    // product of per-axis label permutations
    std::vector<std::vector<int>> perms(r);
    for (int i = 0; i < r; ++i) {
      perms[i].resize(shape.sizes[i]);
      std::iota(perms[i].begin(), perms[i].end(), 1);
    }
    while (true) {
      out.push_back({axis, perms});
      int i = r - 1;
      while (i >= 0 && !std::next_permutation(perms[i].begin(), perms[i].end())) --i;
      if (i < 0) break;
    }
  } while (allow_axis_perm && std::next_permutation(axis.begin(), axis.end()));
  return out;
}

GridOrientation apply_relabeling(const GridOrientation& o, const Relabeling& g) {
  const Grid& in = grid_for(o.shape);
  const int r = o.shape.dims();
  GridShape out_shape;
  out_shape.sizes.resize(r);
  for (int i = 0; i < r; ++i) out_shape.sizes[g.axis_perm[i]] = o.shape.sizes[i];
  const Grid& out = grid_for(out_shape);
  GridOrientation res{out_shape, std::vector<uint8_t>(out.edges.size(), 0)};
  std::vector<int> nc(r);
  for (size_t e = 0; e < in.edges.size(); ++e) {
    const auto& edge = in.edges[e];
    const auto& ca = in.coords[edge.a];
    const auto& cb = in.coords[edge.b];
    for (int i = 0; i < r; ++i) nc[g.axis_perm[i]] = g.relab[i][ca[i] - 1];
    const int na = out.vertex_of(nc);
    for (int i = 0; i < r; ++i) nc[g.axis_perm[i]] = g.relab[i][cb[i] - 1];
    const int nb = out.vertex_of(nc);
    const int head_new = o.dir[e] ? nb : na;
    // locate the edge between na and nb
    const int lo = std::min(na, nb), hi = std::max(na, nb);
    int eid = -1;
    for (auto [cand, other] : out.incident[lo])
      if (other == hi) {
        eid = cand;
        break;
      }
    res.dir[eid] = (head_new == hi) ? 1 : 0;
  }
  return res;
}

CanonicalForm canonical_form(const GridOrientation& o) {
  const int r = o.shape.dims();
  // normalize axis order: sizes nondecreasing (stable)
  std::vector<int> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return o.shape.sizes[a] < o.shape.sizes[b]; });
  Relabeling sort_axes;
  sort_axes.axis_perm.resize(r);
  for (int pos = 0; pos < r; ++pos) sort_axes.axis_perm[order[pos]] = pos;
  sort_axes.relab.resize(r);
  for (int i = 0; i < r; ++i) {
    sort_axes.relab[i].resize(o.shape.sizes[i]);
    std::iota(sort_axes.relab[i].begin(), sort_axes.relab[i].end(), 1);
  }
  GridOrientation sorted = apply_relabeling(o, sort_axes);

  CanonicalForm best{sorted.shape.sizes, {}};
  bool first = true;
  for (const auto& g : shape_relabelings(sorted.shape, true)) {
    std::vector<uint8_t> bits = apply_relabeling(sorted, g).dir;
    if (first || bits < best.bits) {
      best.bits = std::move(bits);
      first = false;
    }
  }
  if (first) best.bits = sorted.dir;  // zero-dimensional
  return best;
}

std::vector<uint8_t> canonical_form_fixed_axes(const GridOrientation& o) {
  std::vector<uint8_t> best;
  bool first = true;
  for (const auto& g : shape_relabelings(o.shape, false)) {
    std::vector<uint8_t> bits = apply_relabeling(o, g).dir;
    if (first || bits < best) {
      best = std::move(bits);
      first = false;
    }
  }
  if (first) best = o.dir;
  return best;
}

GridOrientation induced_on_subgrid(const GridOrientation& o, const Subgrid& s) {
  check_subgrid(o.shape, s);
  const Grid& g = grid_for(o.shape);
  const int r = o.shape.dims();
  GridShape nshape;
  nshape.sizes.resize(r);
  for (int i = 0; i < r; ++i) nshape.sizes[i] = static_cast<int>(s.factors[i].size());
  const Grid& ng = grid_for(nshape);
  GridOrientation res{nshape, std::vector<uint8_t>(ng.edges.size(), 0)};
  for (size_t ne = 0; ne < ng.edges.size(); ++ne) {
    const auto& edge = ng.edges[ne];
    std::vector<int> ca(r), cb(r);
    for (int i = 0; i < r; ++i) {
      ca[i] = s.factors[i][ng.coords[edge.a][i] - 1];
      cb[i] = s.factors[i][ng.coords[edge.b][i] - 1];
    }
    const int va = g.vertex_of(ca), vb = g.vertex_of(cb);
    const int lo = std::min(va, vb), hi = std::max(va, vb);
    int eid = -1;
    for (auto [cand, other] : g.incident[lo])
      if (other == hi) {
        eid = cand;
        break;
      }
    const int head = o.dir[eid] ? hi : lo;
    // order-preserving relabeling keeps lex order, so va < vb here
    res.dir[ne] = (head == vb) ? 1 : 0;
  }
  return res;
}

GridOrientation squeeze(const GridOrientation& o) {
  const int r = o.shape.dims();
  std::vector<int> keep;
  for (int i = 0; i < r; ++i)
    if (o.shape.sizes[i] > 1) keep.push_back(i);
  if (static_cast<int>(keep.size()) == r) return o;
  GridShape nshape;
  for (int i : keep) nshape.sizes.push_back(o.shape.sizes[i]);
  const Grid& g = grid_for(o.shape);
  const Grid& ng = grid_for(nshape);
  GridOrientation res{nshape, std::vector<uint8_t>(ng.edges.size(), 0)};
  for (size_t ne = 0; ne < ng.edges.size(); ++ne) {
    const auto& edge = ng.edges[ne];
    std::vector<int> ca(r, 1), cb(r, 1);
    for (size_t k = 0; k < keep.size(); ++k) {
      ca[keep[k]] = ng.coords[edge.a][k];
      cb[keep[k]] = ng.coords[edge.b][k];
    }
    const int va = g.vertex_of(ca), vb = g.vertex_of(cb);
    const int lo = std::min(va, vb), hi = std::max(va, vb);
    int eid = -1;
    for (auto [cand, other] : g.incident[lo])
      if (other == hi) {
        eid = cand;
        break;
      }
    const int head = o.dir[eid] ? hi : lo;
    res.dir[ne] = (head == vb) ? 1 : 0;  // va < vb since coordinate order preserved
  }
  return res;
}

namespace {

std::vector<Relabeling> relabelings_onto(const GridShape& from, const GridShape& to) {
  // all relabelings mapping an orientation of `from` onto shape `to`
  const int r = from.dims();
  std::vector<Relabeling> out;
  if (to.dims() != r) return out;
  std::vector<int> axis(r);
  std::iota(axis.begin(), axis.end(), 0);
  std::sort(axis.begin(), axis.end());
  do {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      if (to.sizes[axis[i]] != from.sizes[i]) ok = false;
    if (!ok) continue;
    std::vector<std::vector<int>> perms(r);
    for (int i = 0; i < r; ++i) {
      perms[i].resize(from.sizes[i]);
      std::iota(perms[i].begin(), perms[i].end(), 1);
    }
    while (true) {
      out.push_back({axis, perms});
      int i = r - 1;
      while (i >= 0 && !std::next_permutation(perms[i].begin(), perms[i].end())) --i;
      if (i < 0) break;
    }
  } while (std::next_permutation(axis.begin(), axis.end()));
  return out;
}

}  // namespace

std::optional<PatternWitness> contains_pattern(const GridOrientation& o, const GridOrientation& p) {
  const GridOrientation psq = squeeze(p);
  const CanonicalForm pcanon = canonical_form(psq);
  std::vector<int> psizes = psq.shape.sizes;
  std::sort(psizes.begin(), psizes.end());

  const int r = o.shape.dims();
  // iterate subgrids whose non-singleton size multiset matches the pattern's
  std::vector<int> mask(r, 1);
  while (true) {
    Subgrid s;
    s.factors.resize(r);
    std::vector<int> sizes;
    for (int i = 0; i < r; ++i) {
      for (int b = 0; b < o.shape.sizes[i]; ++b)
        if (mask[i] >> b & 1) s.factors[i].push_back(b + 1);
      if (s.factors[i].size() > 1) sizes.push_back(static_cast<int>(s.factors[i].size()));
    }
    std::sort(sizes.begin(), sizes.end());
    if (sizes == psizes) {
      GridOrientation ind = squeeze(induced_on_subgrid(o, s));
      if (canonical_form(ind) == pcanon) {
        for (const auto& g : relabelings_onto(ind.shape, psq.shape)) {
          if (apply_relabeling(ind, g) == psq) return PatternWitness{s, g};
        }
      }
    }
    int i = r - 1;
    while (i >= 0 && mask[i] + 1 == (1 << o.shape.sizes[i])) mask[i--] = 1;
    if (i < 0) break;
    ++mask[i];
  }
  return std::nullopt;
}

void enumerate_usos(const GridShape& shape, int max_edges,
                    const std::function<bool(const GridOrientation&)>& cb) {
  const Grid& g = grid_for(shape);
  const int ne = static_cast<int>(g.edges.size());
  if (ne > max_edges)
    throw std::invalid_argument("enumerate_usos: shape has " + std::to_string(ne) +
                                " edges, above the budget of " + std::to_string(max_edges));
  const SubgridTables& tables = subgrids_for(shape);
  std::vector<uint8_t> dir(ne, 0);
  bool stop = false;
  auto rec = [&](auto&& self, int t) -> void {
    if (stop) return;
    if (t == ne) {
      if (!cb(GridOrientation{shape, dir})) stop = true;
      return;
    }
    for (uint8_t v : {uint8_t{0}, uint8_t{1}}) {
      dir[t] = v;
      bool ok = true;
      for (int sid : tables.by_last_edge[t])
        if (sink_count(dir, tables.subgrids[sid], 2) != 1) {
          ok = false;
          break;
        }
      if (ok) self(self, t + 1);
      if (stop) return;
    }
  };
  if (ne == 0) {
    cb(GridOrientation{shape, {}});
    return;
  }
  rec(rec, 0);
}

std::vector<GridOrientation> enumerate_usos(const GridShape& shape, int max_edges) {
  std::vector<GridOrientation> out;
  enumerate_usos(shape, max_edges, [&](const GridOrientation& o) {
    out.push_back(o);
    return true;
  });
  return out;
}

void enumerate_usos_parallel(const GridShape& shape, int max_edges, int jobs,
                             const std::function<bool(const GridOrientation&)>& cb) {
  const Grid& g = grid_for(shape);
  const int ne = static_cast<int>(g.edges.size());
  if (jobs <= 1 || ne <= 16) {
    enumerate_usos(shape, max_edges, cb);
    return;
  }
  if (ne > max_edges)
    throw std::invalid_argument("enumerate_usos: shape has " + std::to_string(ne) +
                                " edges, above the budget of " + std::to_string(max_edges));
  const SubgridTables& tables = subgrids_for(shape);
  const int split = std::min(ne, 14);

  // phase 1: surviving prefixes of the first `split` edges
  std::vector<std::vector<uint8_t>> prefixes;
  {
    std::vector<uint8_t> dir(ne, 0);
    auto rec = [&](auto&& self, int t) -> void {
      if (t == split) {
        prefixes.push_back(dir);
        return;
      }
      for (uint8_t v : {uint8_t{0}, uint8_t{1}}) {
        dir[t] = v;
        bool ok = true;
        for (int sid : tables.by_last_edge[t])
          if (sink_count(dir, tables.subgrids[sid], 2) != 1) {
            ok = false;
            break;
          }
        if (ok) self(self, t + 1);
      }
    };
    rec(rec, 0);
  }

  // phase 2: workers finish the prefixes
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};
  auto work = [&] {
    std::vector<uint8_t> dir(ne, 0);
    auto rec = [&](auto&& self, int t) -> void {
      if (stop.load(std::memory_order_relaxed)) return;
      if (t == ne) {
        if (!cb(GridOrientation{shape, dir})) stop.store(true);
        return;
      }
      for (uint8_t v : {uint8_t{0}, uint8_t{1}}) {
        dir[t] = v;
        bool ok = true;
        for (int sid : tables.by_last_edge[t])
          if (sink_count(dir, tables.subgrids[sid], 2) != 1) {
            ok = false;
            break;
          }
        if (ok) self(self, t + 1);
        if (stop.load(std::memory_order_relaxed)) return;
      }
    };
    while (!stop.load(std::memory_order_relaxed)) {
      const size_t i = next.fetch_add(1);
      if (i >= prefixes.size()) break;
      dir = prefixes[i];
      rec(rec, split);
    }
  };
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t) threads.emplace_back(work);
  for (auto& th : threads) th.join();
}

}  // namespace uso
