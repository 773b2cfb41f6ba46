#pragma once

#include <string>
#include <vector>

#include "phinary/core.hpp"

namespace phinary {

// Bulk consistency sweeps over ordinal prefixes.  Each sweep exists in a
// serial reference form and an OpenMP form; both must report identical
// results (messages are sorted, so output order is deterministic).
enum class SweepMode { Serial, Parallel };

struct SweepResult {
  std::string name;
  long checked = 0;
  long failures = 0;
  std::vector<std::string> messages;
  bool ok() const { return failures == 0; }
};

// rank(unrank(n)) == n and unrank is strictly increasing, n in [1, count].
SweepResult sweep_rank_bijection(long count, SweepMode mode);

// Algebraic parity class matches the digit-suffix rule, n in [0, count).
SweepResult sweep_parity_agreement(long count, SweepMode mode);

// successor(unrank(n)) == unrank(n+1) and the increment letter matches the
// infinite word, n in [1, count].
SweepResult sweep_successor_word(long count, SweepMode mode);

// Recurrence value equals the exhaustive representation count, n in [0, count].
SweepResult sweep_hyperbinary_oracle(long count, SweepMode mode);

// Rank-indexed recurrence equals the natural-index recurrence, n in [0, count].
SweepResult sweep_diatomic_oracle(long count, SweepMode mode);

std::vector<SweepResult> run_all_sweeps(long scale, SweepMode mode);

}  // namespace phinary
