#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <string>

#include "phinary/diatomic.hpp"
#include "phinary/trees.hpp"

using namespace phinary;

namespace {

Fraction fr(long n, long d) { return Fraction{Int(n), Int(d)}; }

void check_row(const TreeRow& row, const std::vector<Fraction>& expect) {
  REQUIRE(row.nodes.size() == expect.size());
  for (size_t i = 0; i < expect.size(); ++i) {
    CHECK(row.nodes[i] == expect[i]);
  }
}

}  // namespace

TEST_CASE("frozen top rows of all four trees") {
  check_row(calkin_wilf_row(0), {fr(1, 1)});
  check_row(calkin_wilf_row(1), {fr(2, 1), fr(1, 2)});
  check_row(calkin_wilf_row(2), {fr(3, 1), fr(2, 3), fr(3, 2), fr(1, 3)});

  check_row(stern_brocot_row(0), {fr(1, 1)});
  check_row(stern_brocot_row(1), {fr(1, 2), fr(2, 1)});
  check_row(stern_brocot_row(2), {fr(1, 3), fr(2, 3), fr(3, 2), fr(3, 1)});

  check_row(prt_row(0), {fr(1, 1)});
  check_row(prt_row(1), {fr(1, 1), fr(2, 1)});
  check_row(prt_row(2), {fr(2, 1), fr(1, 2), fr(2, 1)});

  check_row(pert_row(0), {fr(1, 1)});
  check_row(pert_row(1), {fr(1, 1), fr(2, 0)});
  check_row(pert_row(2), {fr(1, 1), fr(2, 1), fr(2, 0)});

  CHECK(tree_row(TreeKind::CW, 2, 16).nodes == calkin_wilf_row(2).nodes);
  CHECK(std::string(to_string(TreeKind::PERT)) == "pert");
  CHECK(to_string(fr(2, 3)) == "2/3");
}

TEST_CASE("calkin-wilf numerators telescope") {
  // Within a row, each node's numerator equals the next node's denominator.
  for (long n = 0; n <= 10; ++n) {
    TreeRow row = calkin_wilf_row(n);
    for (size_t k = 0; k + 1 < row.nodes.size(); ++k) {
      CHECK(row.nodes[k].num == row.nodes[k + 1].den);
    }
    CHECK(row.nodes.front().den == 1);
    CHECK(row.nodes.back().num == 1);
  }
}

TEST_CASE("cw and sb rows read off the hyperbinary sequence") {
  for (long n = 0; n <= 8; ++n) {
    TreeRow cw = calkin_wilf_row(n);
    TreeRow sb = stern_brocot_row(n);
    REQUIRE(cw.nodes.size() == (size_t(1) << n));
    REQUIRE(sb.nodes.size() == (size_t(1) << n));
    for (size_t k = 0; k < cw.nodes.size(); ++k) {
      long kk = static_cast<long>(k);
      CHECK(cw.nodes[k].num == hyperbinary(Int((1L << n) + kk)));
      CHECK(cw.nodes[k].den ==
            hyperbinary(Int((1L << (n + 1)) - (kk + 1))));
      CHECK(sb.nodes[k].num == hyperbinary(Int(2 * kk)));
      CHECK(sb.nodes[k].den ==
            hyperbinary(Int((1L << (n + 1)) - 2 * (kk + 1))));
    }
  }
}

TEST_CASE("stern-brocot rows ascend and match the mediant oracle") {
  for (long n = 0; n <= 12; ++n) {
    TreeRow row = stern_brocot_row(n);
    TreeRow oracle = stern_brocot_row_mediant(n);
    REQUIRE(row.nodes.size() == oracle.nodes.size());
    for (size_t k = 0; k < row.nodes.size(); ++k) {
      CHECK(row.nodes[k] == oracle.nodes[k]);
      if (k + 1 < row.nodes.size()) {
        // a/b < c/d as exact cross multiplication.
        CHECK(row.nodes[k].num * row.nodes[k + 1].den <
              row.nodes[k + 1].num * row.nodes[k].den);
      }
    }
  }
}

TEST_CASE("coverage of small reduced fractions") {
  for (TreeKind k : {TreeKind::CW, TreeKind::SB}) {
    CoverageReport rep = verify_coverage(k, 7, 6);
    CHECK(rep.complete);
    CHECK(rep.target_count == 23);
    CHECK(rep.distinct_found == 23);
    CHECK(rep.missing.empty());
  }
  // Depth 4 cannot reach every part-6 fraction yet.
  CoverageReport shallow = verify_coverage(TreeKind::CW, 4, 6);
  CHECK_FALSE(shallow.complete);
  CHECK_FALSE(shallow.missing.empty());
}

TEST_CASE("prt rows have fibonacci lengths and diatomic entries") {
  for (long n = 0; n <= 12; ++n) {
    TreeRow row = prt_row(n);
    CHECK(Int(static_cast<long>(row.nodes.size())) == fib(n + 2));
    CHECK(row.nodes[0].num == fib_diatomic_phi(phi_pow(n)));
    // Entries are consecutive diatomic values, numerators ascending from
    // rank F_{n+2}, denominators descending from rank F_{n+3} - 1.
    for (size_t k = 0; k < row.nodes.size(); ++k) {
      Int kk(static_cast<long>(k));
      CHECK(row.nodes[k].num == fib_diatomic_phi(unrank(fib(n + 2) + kk)));
      CHECK(row.nodes[k].den == fib_diatomic_phi(unrank(fib(n + 3) - kk - 1)));
    }
  }
  check_row(prt_row(3), {fr(2, 1), fr(2, 2), fr(1, 2), fr(3, 1), fr(2, 2)});
}

TEST_CASE("pert rows carry the zero-denominator boundary") {
  for (long n = 1; n <= 10; ++n) {
    TreeRow row = pert_row(n);
    CHECK(Int(static_cast<long>(row.nodes.size())) == fib(n + 2));
    // The hook shrinks monotonically along the row, so zero denominators
    // form a nonempty tail.
    CHECK(row.nodes.back().den == 0);
    bool seen_zero = false;
    for (const Fraction& f : row.nodes) {
      if (f.den == 0) seen_zero = true;
      if (seen_zero) CHECK(f.den == 0);
    }
  }
  check_row(pert_row(3), {fr(1, 2), fr(2, 2), fr(2, 1), fr(3, 0), fr(3, 0)});
}

TEST_CASE("searching the prt") {
  auto hits = find_in_prt(fr(2, 1), 3);
  REQUIRE(hits.size() == 4);
  CHECK(hits[0] == std::pair<long, long>(1, 1));
  CHECK(hits[1] == std::pair<long, long>(2, 0));
  CHECK(hits[2] == std::pair<long, long>(2, 2));
  CHECK(hits[3] == std::pair<long, long>(3, 0));
  auto three_one = find_in_prt(fr(3, 1), 3);
  REQUIRE(three_one.size() == 1);
  CHECK(three_one[0] == std::pair<long, long>(3, 3));
  CHECK(find_in_prt(fr(100, 1), 6).empty());
}

TEST_CASE("dot export") {
  std::string cw = tree_dot(TreeKind::CW, 2, 16);
  CHECK(cw.find("digraph") != std::string::npos);
  CHECK(cw == tree_dot(TreeKind::CW, 2, 16));
  size_t edges = 0;
  for (size_t pos = cw.find("->"); pos != std::string::npos;
       pos = cw.find("->", pos + 2)) {
    ++edges;
  }
  CHECK(edges == 6);

  std::string prt = tree_dot(TreeKind::PRT, 3, 14);
  size_t prt_edges = 0;
  for (size_t pos = prt.find("->"); pos != std::string::npos;
       pos = prt.find("->", pos + 2)) {
    ++prt_edges;
  }
  // Rows 0..3 have 1+2+3+5 = 11 nodes, so the unfolding uses 10 edges.
  CHECK(prt_edges == 10);
}

TEST_CASE("depth guards") {
  CHECK_THROWS_AS(calkin_wilf_row(17), DepthLimit);
  CHECK_THROWS_AS(stern_brocot_row(17), DepthLimit);
  CHECK_THROWS_AS(prt_row(15), DepthLimit);
  CHECK_THROWS_AS(pert_row(15), DepthLimit);
  CHECK_THROWS_AS(calkin_wilf_row(-1), DomainError);
  CHECK_THROWS_AS(tree_row(TreeKind::CW, 3, 2), DepthLimit);
  // A widened limit admits deeper rows.
  CHECK(calkin_wilf_row(17, 18).nodes.size() == size_t(1) << 17);
}
