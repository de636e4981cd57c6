#include "usogrid/signotope.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace uso {

std::string SignMap::sign_string() const {
  std::string s;
  s.reserve(signs.size());
  for (Sign v : signs) s.push_back(v > 0 ? '+' : '-');
  return s;
}

SignMap SignMap::from_sign_string(int n, int rank, const std::string& s) {
  if (static_cast<long long>(s.size()) != binomial(n, rank))
    throw std::invalid_argument("sign string length != C(n, rank)");
  SignMap m{n, rank, {}};
  m.signs.reserve(s.size());
  for (char c : s) {
    if (c == '+')
      m.signs.push_back(1);
    else if (c == '-')
      m.signs.push_back(-1);
    else
      throw std::invalid_argument("sign string must be over '-'/'+'");
  }
  return m;
}

std::string sequence_string(const SignSequence& s) {
  std::string out;
  out.reserve(s.size());
  for (Sign v : s) out.push_back(v == 0 ? '*' : (v > 0 ? '+' : '-'));
  return out;
}

SignSequence sign_sequence(const std::function<Sign(const KSubset&)>& chi, const KSubset& a) {
  SignSequence seq;
  seq.reserve(a.size());
  for (int i = 1; i <= static_cast<int>(a.size()); ++i) seq.push_back(chi(omit_ith(a, i)));
  return seq;
}

SignSequence sign_sequence(const SignMap& chi, const KSubset& a) {
  if (static_cast<int>(a.size()) != chi.rank + 1)
    throw std::invalid_argument("sign_sequence: |A| must equal rank+1");
  SignSequence seq;
  seq.reserve(a.size());
  for (int i = 1; i <= static_cast<int>(a.size()); ++i) seq.push_back(chi.sign(omit_ith(a, i)));
  return seq;
}

int min_sign_changes(const SignSequence& s) {
  // * entries can copy a determined neighbor, so only determined entries count
  int changes = 0;
  Sign prev = 0;
  for (Sign v : s) {
    if (v == 0) continue;
    if (prev != 0 && v != prev) ++changes;
    prev = v;
  }
  return changes;
}

bool is_signotope(const SignMap& chi) {
  for (const auto& a : k_subsets(chi.n, chi.rank + 1))
    if (min_sign_changes(sign_sequence(chi, a)) > 1) return false;
  return true;
}

Signotope Signotope::checked(SignMap m) {
  if (static_cast<long long>(m.signs.size()) != binomial(m.n, m.rank))
    throw std::invalid_argument("Signotope: wrong number of signs");
  for (Sign v : m.signs)
    if (v != 1 && v != -1) throw std::invalid_argument("Signotope: signs must be total over {-,+}");
  if (!is_signotope(m)) throw std::invalid_argument("Signotope: monotonicity violated");
  return Signotope(std::move(m));
}

namespace {

// Enumeration support: subsets are assigned in colex order (so constraints
// activate as early as possible); signs are still stored at canonical
// lexicographic ranks. Subset T completes exactly the (rank+1)-subsets
// {a} u T with a < min(T): every other facet of such a set precedes T in
// colex order. Each check is the list of facet indices into the sign vector.
struct EnumPlan {
  std::vector<KSubset> subs;               // colex order
  std::vector<int> store_at;               // per position: canonical rank
  std::vector<std::vector<std::vector<int>>> checks;  // per position: facet-rank arrays
};

EnumPlan make_plan(int n, int rank) {
  EnumPlan plan;
  plan.subs = k_subsets(n, rank);
  std::sort(plan.subs.begin(), plan.subs.end(), [](const KSubset& a, const KSubset& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  plan.store_at.reserve(plan.subs.size());
  for (const auto& s : plan.subs) plan.store_at.push_back(subset_rank(n, s));
  plan.checks.resize(plan.subs.size());
  for (size_t t = 0; t < plan.subs.size(); ++t) {
    const KSubset& s = plan.subs[t];
    for (int a = 1; a < s.front(); ++a) {
      KSubset big;
      big.push_back(a);
      big.insert(big.end(), s.begin(), s.end());
      std::vector<int> facets;
      for (int i = 1; i <= static_cast<int>(big.size()); ++i)
        facets.push_back(subset_rank(n, omit_ith(big, i)));
      plan.checks[t].push_back(std::move(facets));
    }
  }
  return plan;
}

int changes_of(const std::vector<Sign>& signs, const std::vector<int>& facets) {
  int changes = 0;
  Sign prev = 0;
  for (int idx : facets) {
    Sign v = signs[idx];
    if (prev != 0 && v != prev) ++changes;
    prev = v;
  }
  return changes;
}

}  // namespace

bool enumerate_signotopes_budgeted(int n, int rank, long long max_nodes,
                                   const std::function<bool(const Signotope&)>& cb) {
  if (rank < 1) throw std::invalid_argument("enumerate_signotopes: rank must be >= 1");
  const EnumPlan plan = make_plan(n, rank);
  const int total = static_cast<int>(plan.subs.size());
  std::vector<Sign> signs(total, 0);
  long long nodes = 0;
  bool complete = true;
  bool stop = false;

  auto rec = [&](auto&& self, int t) -> void {
    if (stop) return;
    if (++nodes > max_nodes && max_nodes > 0) {
      complete = false;
      stop = true;
      return;
    }
    if (t == total) {
      SignMap m{n, rank, signs};
      Signotope s = Signotope::checked(std::move(m));
      if (!cb(s)) stop = true;
      return;
    }
    for (Sign v : {Sign(-1), Sign(1)}) {
      signs[plan.store_at[t]] = v;
      bool ok = true;
      for (const auto& facets : plan.checks[t])
        if (changes_of(signs, facets) > 1) {
          ok = false;
          break;
        }
      if (ok) self(self, t + 1);
      if (stop) break;
    }
    signs[plan.store_at[t]] = 0;
  };
  rec(rec, 0);
  return complete;
}

void enumerate_signotopes(int n, int rank, const std::function<bool(const Signotope&)>& cb) {
  enumerate_signotopes_budgeted(n, rank, 0 /* unlimited */, cb);
}

std::vector<Signotope> enumerate_signotopes(int n, int rank) {
  std::vector<Signotope> out;
  enumerate_signotopes(n, rank, [&](const Signotope& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

void sample_signotopes(int n, int rank, int count, uint64_t seed,
                       const std::function<void(const Signotope&)>& cb) {
  const EnumPlan plan = make_plan(n, rank);
  const int total = static_cast<int>(plan.subs.size());
  std::mt19937_64 rng(seed);
  for (int k = 0; k < count; ++k) {
    std::vector<Sign> signs(total, 0);
    bool found = false;
    auto rec = [&](auto&& self, int t) -> void {
      if (found) return;
      if (t == total) {
        found = true;
        cb(Signotope::checked(SignMap{n, rank, signs}));
        return;
      }
      Sign first = (rng() & 1) ? Sign(1) : Sign(-1);
      for (Sign v : {first, Sign(-first)}) {
        signs[plan.store_at[t]] = v;
        bool ok = true;
        for (const auto& facets : plan.checks[t])
          if (changes_of(signs, facets) > 1) {
            ok = false;
            break;
          }
        if (ok) self(self, t + 1);
        if (found) return;
      }
      signs[plan.store_at[t]] = 0;
    };
    rec(rec, 0);
  }
}

Signotope restrict(const Signotope& chi, const KSubset& s) {
  const int rank = chi.rank();
  if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("restrict: S must be a strictly increasing subset");
  for (int x : s)
    if (x < 1 || x > chi.n()) throw std::invalid_argument("restrict: element out of range");
  if (static_cast<int>(s.size()) < rank) throw std::invalid_argument("restrict: |S| < rank");
  const int n2 = static_cast<int>(s.size());
  SignMap m{n2, rank, {}};
  for (const auto& sub : k_subsets(n2, rank)) {
    KSubset orig;
    orig.reserve(sub.size());
    for (int x : sub) orig.push_back(s[x - 1]);
    m.signs.push_back(chi.sign(orig));
  }
  return Signotope::checked(std::move(m));
}

Signotope contract(const Signotope& chi, const KSubset& f) {
  const int rank = chi.rank();
  if (static_cast<int>(f.size()) >= rank) throw std::invalid_argument("contract: |F| must be < rank");
  std::set<int> fset(f.begin(), f.end());
  if (fset.size() != f.size()) throw std::invalid_argument("contract: F has repeats");
  for (int x : f)
    if (x < 1 || x > chi.n()) throw std::invalid_argument("contract: element out of range");
  KSubset rest;
  for (int x = 1; x <= chi.n(); ++x)
    if (!fset.count(x)) rest.push_back(x);
  const int n2 = static_cast<int>(rest.size());
  const int rank2 = rank - static_cast<int>(f.size());
  SignMap m{n2, rank2, {}};
  for (const auto& sub : k_subsets(n2, rank2)) {
    KSubset orig;
    orig.reserve(rank);
    for (int x : sub) orig.push_back(rest[x - 1]);
    orig.insert(orig.end(), f.begin(), f.end());
    std::sort(orig.begin(), orig.end());
    m.signs.push_back(chi.sign(orig));
  }
  return Signotope::checked(std::move(m));
}

std::vector<Signotope> flip_class(const Signotope& chi, const std::vector<KSubset>& allowed) {
  std::vector<int> positions;
  positions.reserve(allowed.size());
  for (const auto& t : allowed) positions.push_back(subset_rank(chi.n(), t));

  std::set<std::vector<Sign>> seen = {chi.map().signs};
  std::vector<std::vector<Sign>> stack = {chi.map().signs};
  while (!stack.empty()) {
    std::vector<Sign> cur = std::move(stack.back());
    stack.pop_back();
    for (int pos : positions) {
      std::vector<Sign> next = cur;
      next[pos] = -next[pos];
      if (seen.count(next)) continue;
      SignMap m{chi.n(), chi.rank(), next};
      if (!is_signotope(m)) continue;
      seen.insert(next);
      stack.push_back(std::move(next));
    }
  }
  std::vector<Signotope> out;
  out.reserve(seen.size());
  for (const auto& signs : seen) out.push_back(Signotope::checked(SignMap{chi.n(), chi.rank(), signs}));
  return out;  // set iteration is already sorted by sign vector
}

}  // namespace uso
