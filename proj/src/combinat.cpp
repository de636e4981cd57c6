#include "usogrid/combinat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace uso {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<KSubset> k_subsets(int n, int k) {
  std::vector<KSubset> out;
  if (k < 0 || k > n) return out;
  out.reserve(static_cast<size_t>(binomial(n, k)));
  KSubset cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out.assign(1, {});
  return out;
}

int subset_rank(int n, const KSubset& sub) {
  // lexicographic rank among sorted k-subsets of [n]
  const int k = static_cast<int>(sub.size());
  long long rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int c = prev + 1; c < sub[i]; ++c) rank += binomial(n - c, k - 1 - i);
    prev = sub[i];
  }
  return static_cast<int>(rank);
}

KSubset subset_unrank(int n, int k, int rank) {
  KSubset sub;
  sub.reserve(k);
  int c = 1;
  for (int i = 0; i < k; ++i) {
    while (true) {
      long long block = binomial(n - c, k - 1 - i);
      if (rank < block) break;
      rank -= static_cast<int>(block);
      ++c;
    }
    sub.push_back(c++);
  }
  return sub;
}

KSubset omit_ith(const KSubset& a, int i) {
  if (i < 1 || i > static_cast<int>(a.size()))
    throw std::out_of_range("omit_ith: index out of range");
  KSubset out;
  out.reserve(a.size() - 1);
  for (int j = 0; j < static_cast<int>(a.size()); ++j)
    if (j != i - 1) out.push_back(a[j]);
  return out;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  for (int i = 0; i < n; ++i) p.images[i] = i + 1;
  return p;
}

Permutation Permutation::compose(const Permutation& other) const {
  Permutation r;
  r.images.resize(images.size());
  for (int x = 1; x <= n(); ++x) r.images[x - 1] = (*this)(other(x));
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images.resize(images.size());
  for (int x = 1; x <= n(); ++x) r.images[images[x - 1] - 1] = x;
  return r;
}

bool Poset::is_acyclic() const {
  std::vector<std::vector<int>> adj(n + 1);
  std::vector<int> indeg(n + 1, 0);
  for (auto& [a, b] : relations) {
    adj[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> stack;
  for (int v = 1; v <= n; ++v)
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

std::vector<std::vector<int>> linear_extensions(const Poset& p) {
  if (!p.is_acyclic()) throw std::invalid_argument("linear_extensions: cyclic relation");
  std::vector<std::vector<bool>> less(p.n + 1, std::vector<bool>(p.n + 1, false));
  for (auto& [a, b] : p.relations) less[a][b] = true;
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  std::vector<bool> used(p.n + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(prefix.size()) == p.n) {
      out.push_back(prefix);
      return;
    }
    for (int x = 1; x <= p.n; ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (int y = 1; y <= p.n && ok; ++y)
        if (!used[y] && y != x && less[y][x]) ok = false;
      if (!ok) continue;
      used[x] = true;
      prefix.push_back(x);
      self(self);
      prefix.pop_back();
      used[x] = false;
    }
  };
  rec(rec);
  return out;  // lexicographic by construction
}

namespace {

Permutation from_swaps(std::initializer_list<std::pair<int, int>> swaps) {
  Permutation p = Permutation::identity(6);
  for (auto [a, b] : swaps) std::swap(p.images[a - 1], p.images[b - 1]);
  return p;
}

std::vector<Permutation> build_hyperoctahedral() {
  const std::vector<Permutation> gens = {
      from_swaps({{1, 2}}), from_swaps({{3, 4}}), from_swaps({{5, 6}}),
      from_swaps({{1, 3}, {2, 4}}), from_swaps({{3, 5}, {4, 6}})};
  std::set<Permutation> elems = {Permutation::identity(6)};
  std::vector<Permutation> frontier(elems.begin(), elems.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& g : frontier)
      for (const auto& h : gens) {
        Permutation c = h.compose(g);
        if (elems.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return {elems.begin(), elems.end()};
}

}  // namespace

const std::vector<Permutation>& hyperoctahedral_group() {
  static const std::vector<Permutation> group = build_hyperoctahedral();
  return group;
}

bool in_hyperoctahedral_group(const Permutation& pi) {
  const auto& g = hyperoctahedral_group();
  return std::binary_search(g.begin(), g.end(), pi);
}

}  // namespace uso
