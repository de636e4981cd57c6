#include "usogrid/blocksig.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace uso {

int BlockPartition::n() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

std::vector<std::vector<int>> BlockPartition::blocks() const {
  std::vector<std::vector<int>> out;
  int next = 1;
  for (int s : sizes) {
    std::vector<int> blk(s);
    std::iota(blk.begin(), blk.end(), next);
    next += s;
    out.push_back(std::move(blk));
  }
  return out;
}

BlockSignotope BlockSignotope::checked(Signotope chi, BlockPartition partition) {
  for (int s : partition.sizes)
    if (s < 1) throw std::invalid_argument("BlockPartition: sizes must be >= 1");
  if (partition.count() != chi.rank() - 1)
    throw std::invalid_argument("BlockSignotope: block count must equal rank-1");
  if (partition.n() != chi.n())
    throw std::invalid_argument("BlockSignotope: block sizes must sum to n");
  return BlockSignotope{std::move(chi), std::move(partition)};
}

GridOrientation induced_orientation(const BlockSignotope& b) {
  const GridShape shape = b.grid_shape();
  const Grid& g = grid_for(shape);
  const auto blocks = b.partition.blocks();
  const int r = shape.dims();
  GridOrientation o{shape, std::vector<uint8_t>(g.edges.size(), 0)};
  KSubset sub(r + 1);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const auto& edge = g.edges[e];
    const auto& ca = g.coords[edge.a];  // lex-smaller, so c < c' in the edge dimension
    const auto& cb = g.coords[edge.b];
    for (int i = 0; i < r; ++i) sub[i] = blocks[i][ca[i] - 1];
    sub[r] = blocks[edge.dim][cb[edge.dim] - 1];
    std::sort(sub.begin(), sub.end());
    o.dir[e] = b.chi.sign(sub) > 0 ? 1 : 0;
  }
  return o;
}

std::vector<int> rf_chi(const BlockSignotope& b, const std::vector<int>& vertex_labels) {
  const auto blocks = b.partition.blocks();
  const int r = b.partition.count();
  if (static_cast<int>(vertex_labels.size()) != r)
    throw std::invalid_argument("rf_chi: need one label per block");
  std::vector<int> out(r, 0);
  KSubset sub(r + 1);
  for (int i = 0; i < r; ++i) {
    const int ci = vertex_labels[i];
    if (std::find(blocks[i].begin(), blocks[i].end(), ci) == blocks[i].end())
      throw std::invalid_argument("rf_chi: label not in its block");
    for (int c : blocks[i]) {
      if (c == ci) continue;
      for (int k = 0; k < r; ++k) sub[k] = vertex_labels[k];
      sub[r] = c;
      std::sort(sub.begin(), sub.end());
      const Sign s = b.chi.sign(sub);
      if ((c > ci && s > 0) || (c < ci && s < 0)) ++out[i];
    }
  }
  return out;
}

bool GChiGraph::acyclic() const {
  const int n = static_cast<int>(vertices.size());
  std::vector<std::vector<int>> adj(n);
  std::vector<int> indeg(n, 0);
  for (auto& [a, b] : arcs) {
    adj[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) stack.push_back(v);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int w : adj[v])
      if (--indeg[w] == 0) stack.push_back(w);
  }
  return seen == n;
}

GChiGraph g_chi_graph(const Signotope& chi) {
  GChiGraph g;
  g.vertices = k_subsets(chi.n(), chi.rank() - 1);
  const int nv = static_cast<int>(g.vertices.size());
  for (int i = 0; i < nv; ++i) {
    for (int j = i + 1; j < nv; ++j) {
      KSubset u;
      std::set_union(g.vertices[i].begin(), g.vertices[i].end(), g.vertices[j].begin(),
                     g.vertices[j].end(), std::back_inserter(u));
      if (static_cast<int>(u.size()) != chi.rank()) continue;
      if (chi.sign(u) > 0)
        g.arcs.emplace_back(i, j);  // lexicographically smaller set first
      else
        g.arcs.emplace_back(j, i);
    }
  }
  return g;
}

BlockSignotope subgrid_block_signotope(const BlockSignotope& b, const Subgrid& s) {
  const auto blocks = b.partition.blocks();
  const int r = b.partition.count();
  if (static_cast<int>(s.factors.size()) != r)
    throw std::invalid_argument("subgrid_block_signotope: factor count != blocks");

  KSubset survivors;
  for (int i = 0; i < r; ++i) {
    for (int c : s.factors[i]) {
      if (c < 1 || c > b.partition.sizes[i])
        throw std::invalid_argument("subgrid_block_signotope: factor out of range");
      survivors.push_back(blocks[i][c - 1]);
    }
  }
  std::sort(survivors.begin(), survivors.end());
  Signotope restricted = restrict(b.chi, survivors);

  // positions (in the relabeled ground set) of singleton factors, to contract
  KSubset fixed;
  std::vector<int> new_sizes;
  int offset = 0;
  for (int i = 0; i < r; ++i) {
    const int sz = static_cast<int>(s.factors[i].size());
    if (sz == 1)
      fixed.push_back(offset + 1);
    else
      new_sizes.push_back(sz);
    offset += sz;
  }
  if (new_sizes.empty())
    throw std::invalid_argument("subgrid_block_signotope: zero-dimensional subgrid");
  Signotope result = fixed.empty() ? restricted : contract(restricted, fixed);
  return BlockSignotope::checked(std::move(result), BlockPartition{new_sizes});
}

}  // namespace uso
