#pragma once
// Ordered subsets, permutations, posets, and the fixed hyperoctahedral
// instance on [6]. Shared substrate for the signotope and grid modules.

#include <array>
#include <cstdint>
#include <vector>

namespace uso {

// Subsets of [n] are strictly increasing 1-based integer sequences.
using KSubset = std::vector<int>;

// Lexicographic list of all k-subsets of [n]. This ordering is the contract
// every sign-map serialization relies on.
std::vector<KSubset> k_subsets(int n, int k);

long long binomial(int n, int k);

// Rank of a k-subset within k_subsets(n, k); inverse of subset_unrank.
int subset_rank(int n, const KSubset& sub);
KSubset subset_unrank(int n, int k, int rank);

// A with its i-th smallest element removed (i is 1-based).
KSubset omit_ith(const KSubset& a, int i);

// One-line notation: images[x-1] = pi(x), a bijection on [n].
struct Permutation {
  std::vector<int> images;

  int n() const { return static_cast<int>(images.size()); }
  int operator()(int x) const { return images[x - 1]; }
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  static Permutation identity(int n);
  Permutation compose(const Permutation& other) const;  // this after other
  Permutation inverse() const;
};

// Finite poset: ground set {1..n} with the given (irredundant) relation pairs.
// The transitive closure is computed on demand, never stored.
struct Poset {
  int n = 0;
  std::vector<std::pair<int, int>> relations;  // (a, b) meaning a < b

  bool is_acyclic() const;
};

// All total orders of {1..n} extending the poset, lexicographically sorted.
// Throws std::invalid_argument on a cyclic relation.
std::vector<std::vector<int>> linear_extensions(const Poset& p);

// The 48 symmetries of the 3-cube as label permutations of [6] preserving the
// pairing {1,2}|{3,4}|{5,6}: closure of (12), (34), (56), (13)(24), (35)(46).
// Sorted lexicographically by image sequence.
const std::vector<Permutation>& hyperoctahedral_group();

bool in_hyperoctahedral_group(const Permutation& pi);

}  // namespace uso
