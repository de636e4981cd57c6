#pragma once
// Corpus sweeps over block signotopes: enumerate (or sample beyond budget),
// induce, and check USO / acyclicity / refined-index / admissibility.

#include <cstdint>
#include <optional>

#include "usogrid/blocksig.hpp"

namespace uso {

struct SweepConfig {
  int n = 0;
  int rank = 0;
  std::vector<int> blocks;
  long long budget = 10'000'000;  // search-tree node budget; 0 = unlimited
  int samples = 10'000;          // seeded samples when the budget is exhausted
  uint64_t seed = 12345;
  int jobs = 1;
};

struct SweepResult {
  long long processed = 0;
  bool exhaustive = true;  // false when sampling replaced full enumeration
  long long non_uso = 0;
  long long cyclic = 0;
  long long rf_mismatch = 0;      // rf_chi not bijective or != refined_index
  long long non_admissible = 0;   // among USOs
  // lexicographically smallest offender per category
  std::optional<Signotope> non_uso_cert, cyclic_cert, rf_cert, non_admissible_cert;

  bool clean() const { return !non_uso && !cyclic && !rf_mismatch && !non_admissible; }
};

SweepResult sweep_block_signotopes(const SweepConfig& config);

}  // namespace uso
