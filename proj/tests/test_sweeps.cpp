#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "phinary/sweeps.hpp"

using namespace phinary;

namespace {

void check_modes_agree(SweepResult (*sweep)(long, SweepMode), long count,
                       long expect_checked) {
  SweepResult serial = sweep(count, SweepMode::Serial);
  SweepResult parallel = sweep(count, SweepMode::Parallel);
  CHECK(serial.name == parallel.name);
  CHECK(serial.checked == parallel.checked);
  CHECK(serial.failures == parallel.failures);
  CHECK(serial.messages == parallel.messages);
  CHECK(serial.ok());
  CHECK(serial.checked == expect_checked);
}

}  // namespace

TEST_CASE("rank bijection sweep") {
  check_modes_agree(sweep_rank_bijection, 2000, 2000);
}

TEST_CASE("parity agreement sweep") {
  check_modes_agree(sweep_parity_agreement, 2000, 2000);
}

TEST_CASE("successor word sweep") {
  check_modes_agree(sweep_successor_word, 2000, 2000);
}

TEST_CASE("hyperbinary oracle sweep") {
  check_modes_agree(sweep_hyperbinary_oracle, 1024, 1025);
}

TEST_CASE("diatomic oracle sweep") {
  check_modes_agree(sweep_diatomic_oracle, 400, 401);
}

TEST_CASE("full sweep battery") {
  auto results = run_all_sweeps(1, SweepMode::Parallel);
  REQUIRE(results.size() == 5);
  for (const SweepResult& r : results) {
    CHECK(r.ok());
    CHECK(r.checked > 0);
    CHECK(r.messages.empty());
  }
  CHECK_THROWS_AS(run_all_sweeps(0, SweepMode::Serial), DomainError);
}
