#include "phinary/sweeps.hpp"

#include <algorithm>

#include "phinary/codec.hpp"
#include "phinary/diatomic.hpp"
#include "phinary/ordinal.hpp"
#include "phinary/words.hpp"

namespace phinary {

namespace {

constexpr long kMessageCap = 20;

template <class Check>
SweepResult run_sweep(const char* name, long lo, long hi, SweepMode mode,
                      Check check) {
  SweepResult result;
  result.name = name;
  result.checked = hi - lo + 1;
  long failures = 0;
  std::vector<std::string> msgs;
  bool parallel = mode == SweepMode::Parallel;
#ifndef _OPENMP
  parallel = false;
#endif
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : failures)
    for (long n = lo; n <= hi; ++n) {
      std::string m = check(n);
      if (!m.empty()) {
        ++failures;
#pragma omp critical(phinary_sweep_messages)
        {
          if (static_cast<long>(msgs.size()) < kMessageCap)
            msgs.push_back(std::move(m));
        }
      }
    }
  } else {
    for (long n = lo; n <= hi; ++n) {
      std::string m = check(n);
      if (!m.empty()) {
        ++failures;
        if (static_cast<long>(msgs.size()) < kMessageCap)
          msgs.push_back(std::move(m));
      }
    }
  }
  std::sort(msgs.begin(), msgs.end());
  result.failures = failures;
  result.messages = std::move(msgs);
  return result;
}

std::string at(long n, const char* what) {
  return "n=" + std::to_string(n) + ": " + what;
}

}  // namespace

SweepResult sweep_rank_bijection(long count, SweepMode mode) {
  fib(64);
  return run_sweep("rank-bijection", 1, count, mode, [](long n) -> std::string {
    PhiInt p = unrank(n);
    if (rank(p) != n) return at(n, "rank(unrank(n)) != n");
    if (!(unrank(n - 1) < p)) return at(n, "unrank not strictly increasing");
    return {};
  });
}

SweepResult sweep_parity_agreement(long count, SweepMode mode) {
  fib(64);
  return run_sweep("parity-agreement", 0, count - 1, mode,
                   [](long n) -> std::string {
    PhiInt p = unrank(n);
    auto [cls, witness] = parity_decompose(p);
    if (parity_suffix(p) != cls) return at(n, "suffix rule disagrees");
    PhiInt rebuilt;
    switch (cls) {
      case Parity::even:
        rebuilt = mul(phi_pow(2), witness);
        break;
      case Parity::odd:
        rebuilt = mul(phi_pow(2), witness) + PhiInt(0, 1);
        break;
      case Parity::curious:
        rebuilt = mul(phi_pow(3), witness) + PhiInt(1, 0);
        break;
    }
    if (rebuilt != p) return at(n, "witness does not reconstruct");
    if (!is_phinary(witness)) return at(n, "witness not phinary");
    return {};
  });
}

SweepResult sweep_successor_word(long count, SweepMode mode) {
  fib(64);
  return run_sweep("successor-word", 1, count, mode, [](long n) -> std::string {
    PhiInt prev = unrank(n - 1);
    PhiInt cur = unrank(n);
    if (successor(prev) != cur) return at(n, "successor misses next ordinal");
    if (predecessor(cur) != prev) return at(n, "predecessor misses previous");
    PhiInt step = cur - prev;
    char letter = infinite_letter(Int(n));
    PhiInt expect = letter == 'A' ? PhiInt(0, 1) : PhiInt(1, -1);
    if (step != expect) return at(n, "increment letter mismatch");
    return {};
  });
}

SweepResult sweep_hyperbinary_oracle(long count, SweepMode mode) {
  hyperbinary_warm(count + 2);
  return run_sweep("hyperbinary-oracle", 0, count, mode,
                   [count](long n) -> std::string {
    Int reps(static_cast<long>(hyperbinary_reps(Int(n), count).size()));
    if (hyperbinary(Int(n)) != reps) return at(n, "recurrence != rep count");
    return {};
  });
}

SweepResult sweep_diatomic_oracle(long count, SweepMode mode) {
  fib(64);
  fib_diatomic_phi_warm(count);
  return run_sweep("diatomic-oracle", 0, count, mode,
                   [count](long n) -> std::string {
    PhiInt p = unrank(n);
    Int value = fib_diatomic_phi(p);
    if (value != fib_diatomic_nat(Int(n)))
      return at(n, "phinary recurrence != natural recurrence");
    if (value != Int(static_cast<long>(hyperphinary_reps(p, count).size())))
      return at(n, "recurrence != distinct phi power rep count");
    return {};
  });
}

std::vector<SweepResult> run_all_sweeps(long scale, SweepMode mode) {
  if (scale < 1) throw DomainError("run_all_sweeps: scale >= 1");
  return {
      sweep_rank_bijection(10000 * scale, mode),
      sweep_parity_agreement(10000 * scale, mode),
      sweep_successor_word(10000 * scale, mode),
      sweep_hyperbinary_oracle(4096 * scale, mode),
      sweep_diatomic_oracle(1000 * scale, mode),
  };
}

}  // namespace phinary
