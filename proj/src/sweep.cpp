#include "usogrid/sweep.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "usogrid/admissibility.hpp"

namespace uso {

namespace {

void check_one(const Signotope& chi, const BlockPartition& part, SweepResult& r) {
  const BlockSignotope b = BlockSignotope::checked(chi, part);
  const GridOrientation o = induced_orientation(b);
  ++r.processed;

  const bool uso = is_uso(o);
  if (!uso) {
    ++r.non_uso;
    if (!r.non_uso_cert || chi.map().signs < r.non_uso_cert->map().signs) r.non_uso_cert = chi;
  }
  if (!is_acyclic(o)) {
    ++r.cyclic;
    if (!r.cyclic_cert || chi.map().signs < r.cyclic_cert->map().signs) r.cyclic_cert = chi;
  }

  const Grid& g = grid_for(o.shape);
  const RefinedIndex rf = refined_index(o);
  const auto blocks = part.blocks();
  bool rf_ok = true;
  std::set<std::vector<int>> values;
  for (int v = 0; v < g.nverts && rf_ok; ++v) {
    std::vector<int> labels(part.count());
    for (int i = 0; i < part.count(); ++i) labels[i] = blocks[i][g.coords[v][i] - 1];
    const std::vector<int> formula = rf_chi(b, labels);
    if (formula != rf.values[v] || !values.insert(formula).second) rf_ok = false;
  }
  if (!rf_ok) {
    ++r.rf_mismatch;
    if (!r.rf_cert || chi.map().signs < r.rf_cert->map().signs) r.rf_cert = chi;
  }

  if (uso && !is_admissible(o)) {
    ++r.non_admissible;
    if (!r.non_admissible_cert || chi.map().signs < r.non_admissible_cert->map().signs)
      r.non_admissible_cert = chi;
  }
}

void merge(SweepResult& into, const SweepResult& from) {
  into.processed += from.processed;
  into.non_uso += from.non_uso;
  into.cyclic += from.cyclic;
  into.rf_mismatch += from.rf_mismatch;
  into.non_admissible += from.non_admissible;
  auto take_min = [](std::optional<Signotope>& a, const std::optional<Signotope>& b) {
    if (b && (!a || b->map().signs < a->map().signs)) a = b;
  };
  take_min(into.non_uso_cert, from.non_uso_cert);
  take_min(into.cyclic_cert, from.cyclic_cert);
  take_min(into.rf_cert, from.rf_cert);
  take_min(into.non_admissible_cert, from.non_admissible_cert);
}

}  // namespace

SweepResult sweep_block_signotopes(const SweepConfig& config) {
  std::vector<Signotope> corpus;
  SweepResult result;
  result.exhaustive = enumerate_signotopes_budgeted(config.n, config.rank, config.budget,
                                                    [&](const Signotope& chi) {
                                                      corpus.push_back(chi);
                                                      return true;
                                                    });
  if (!result.exhaustive) {
    corpus.clear();
    sample_signotopes(config.n, config.rank, config.samples, config.seed,
                      [&](const Signotope& chi) { corpus.push_back(chi); });
  }

  const BlockPartition part{config.blocks};
  const int jobs = std::max(1, config.jobs);
  if (jobs == 1 || corpus.size() < 64) {
    for (const auto& chi : corpus) check_one(chi, part, result);
    return result;
  }
  std::vector<SweepResult> partial(jobs);
  std::vector<std::thread> threads;
  for (int t = 0; t < jobs; ++t)
    threads.emplace_back([&, t] {
      for (size_t i = t; i < corpus.size(); i += jobs) check_one(corpus[i], part, partial[t]);
    });
  for (auto& th : threads) th.join();
  for (const auto& p : partial) merge(result, p);
  return result;
}

}  // namespace uso
