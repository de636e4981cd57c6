#pragma once
// Sign maps on r-subsets of [n], the one-sign-change monotonicity axiom,
// enumeration, restriction, contraction, and single-sign flips.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "usogrid/combinat.hpp"

namespace uso {

// Sign values: -1, +1; 0 marks an undetermined entry in partial data.
using Sign = int8_t;

// Total sign map on the C(n, rank) subsets in canonical (lexicographic)
// order. Not necessarily valid; see Signotope below.
struct SignMap {
  int n = 0;
  int rank = 0;
  std::vector<Sign> signs;  // size C(n, rank), entries in {-1, +1}

  Sign sign(const KSubset& sub) const { return signs[subset_rank(n, sub)]; }
  std::string sign_string() const;  // over '-'/'+' in canonical order
  static SignMap from_sign_string(int n, int rank, const std::string& s);
};

// Length-(rank+1) sequence over {-,+,*}; * (encoded 0) marks entries a
// partial map leaves undetermined.
using SignSequence = std::vector<Sign>;

std::string sequence_string(const SignSequence& s);  // over '-', '+', '*'

// chi(A) := (chi(A^[1]), ..., chi(A^[k])) for |A| = k, using any subset->sign
// lookup (0 for undetermined entries of a partial map).
SignSequence sign_sequence(const std::function<Sign(const KSubset&)>& chi, const KSubset& a);
SignSequence sign_sequence(const SignMap& chi, const KSubset& a);

// Minimum number of adjacent sign changes over all completions of the *
// entries. Equals the change count of the subsequence of determined entries.
int min_sign_changes(const SignSequence& s);

// Monotonicity: every (rank+1)-subset sequence has at most one sign change.
bool is_signotope(const SignMap& chi);

// A sign map validated against the monotonicity axiom. Partial data is never
// admitted here.
class Signotope {
 public:
  static Signotope checked(SignMap m);  // throws std::invalid_argument

  const SignMap& map() const { return map_; }
  int n() const { return map_.n; }
  int rank() const { return map_.rank; }
  Sign sign(const KSubset& sub) const { return map_.sign(sub); }

  bool operator==(const Signotope&) const = default;

 private:
  explicit Signotope(SignMap m) : map_(std::move(m)) {}
  SignMap map_;
};

// Streams every valid signotope exactly once, in the deterministic order
// given by assigning '-' before '+' along the canonical subset order.
// rank > n is permitted and yields the single empty map. Return false from
// the callback to stop early.
void enumerate_signotopes(int n, int rank, const std::function<bool(const Signotope&)>& cb);

std::vector<Signotope> enumerate_signotopes(int n, int rank);

// Budgeted variant: stops once max_nodes search-tree nodes were expanded.
// Returns true iff the enumeration completed within budget.
bool enumerate_signotopes_budgeted(int n, int rank, long long max_nodes,
                                   const std::function<bool(const Signotope&)>& cb);

// Seeded uniform-restart sampling of the search tree: each sample is an
// independent random descent (backtracking over dead ends) to a full valid
// signotope. Duplicates across samples are possible.
void sample_signotopes(int n, int rank, int count, uint64_t seed,
                       const std::function<void(const Signotope&)>& cb);

// Ground set restricted to S (|S| >= rank unless C(|S|,rank) is empty),
// elements relabeled order-preservingly to [|S|].
Signotope restrict(const Signotope& chi, const KSubset& s);

// Contraction M -> chi(M u F) on (rank-|F|)-subsets of [n] \ F, relabeled.
// Requires |F| < rank.
Signotope contract(const Signotope& chi, const KSubset& f);

// Connected component of chi in the graph whose moves negate a single sign
// chi(T), T in `allowed`, when the result is still a signotope. Sorted by
// sign string.
std::vector<Signotope> flip_class(const Signotope& chi, const std::vector<KSubset>& allowed);

}  // namespace uso
