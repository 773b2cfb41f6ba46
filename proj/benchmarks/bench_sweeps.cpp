#include <chrono>
#include <cstdlib>
#include <iostream>

#include "phinary/sweeps.hpp"

// Times the verification sweeps in serial and OpenMP form.  The first pass
// fills the shared memo tables so both timed passes see warm caches; the
// remaining work (representation enumeration, rank arithmetic) is recomputed
// per call and dominates.

namespace {

double run_once(long scale, phinary::SweepMode mode, long* failures) {
  auto t0 = std::chrono::steady_clock::now();
  auto results = phinary::run_all_sweeps(scale, mode);
  auto t1 = std::chrono::steady_clock::now();
  for (const auto& r : results) *failures += r.failures;
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  long scale = argc > 1 ? std::atol(argv[1]) : 2;
  if (scale < 1) {
    std::cerr << "usage: phinary-bench [scale >= 1]\n";
    return 2;
  }
  long failures = 0;
  run_once(scale, phinary::SweepMode::Serial, &failures);  // cache warmup
  double serial = run_once(scale, phinary::SweepMode::Serial, &failures);
  double parallel = run_once(scale, phinary::SweepMode::Parallel, &failures);
  std::cout << "scale       " << scale << "\n";
  std::cout << "serial      " << serial << " s\n";
  std::cout << "parallel    " << parallel << " s\n";
  if (parallel > 0) std::cout << "speedup     " << serial / parallel << "x\n";
  if (failures > 0) {
    std::cerr << "sweep failures: " << failures << "\n";
    return 1;
  }
  return 0;
}
