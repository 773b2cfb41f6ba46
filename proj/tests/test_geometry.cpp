#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "phinary/geometry.hpp"
#include "phinary/ordinal.hpp"

using namespace phinary;

namespace {

QuadRat psi_pow(long n) { return phi_pow_q(-n); }

std::string read_golden(const std::string& name) {
  std::string path = std::string(PHINARY_GOLDEN_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file ", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("first golden diamond row") {
  DiamondRow r = gd_row(1);
  CHECK(r.side == psi_pow(1));
  CHECK(r.zeta == psi_pow(1));
  CHECK(r.intervals == "A");
  REQUIRE(r.points.size() == 2);
  CHECK(r.points[0] == -psi_pow(1) * QuadRat(Rat(1, 2), Rat(0)));
  CHECK(r.points[1] == psi_pow(1) * QuadRat(Rat(1, 2), Rat(0)));
  REQUIRE(r.facets.size() == 2);
  CHECK(r.facets[0].points_up());
  CHECK_FALSE(r.facets[1].points_up());
  auto up = r.facets[0].apex();
  auto down = r.facets[1].apex();
  CHECK(up.first == QuadRat(0));
  CHECK(up.second == psi_pow(1) + psi_pow(1));
  CHECK(up.second == gd_row(3).zeta);
  CHECK(down.first == QuadRat(0));
  CHECK(down.second == QuadRat(0));
}

TEST_CASE("golden diamond rows follow the infinite word") {
  CHECK(gd_row(2).intervals == "ABA");
  CHECK(gd_row(3).intervals == "ABAABA");
  for (long n = 1; n <= 8; ++n) {
    DiamondRow r = gd_row(n);
    CHECK(r.zeta == phi_q() * (QuadRat(1) - psi_pow(n)));
    CHECK(r.intervals == infinite_prefix(fib(n + 3).get_si() - 2));
    // Pair count F_{n+2} - 1.
    CHECK(Int(static_cast<long>(r.facets.size())) == 2 * (fib(n + 2) - 1));
    // Row spans the girdle symmetrically.
    CHECK(r.points.front() == -r.zeta * QuadRat(Rat(1, 2), Rat(0)));
    CHECK(r.points.back() == r.zeta * QuadRat(Rat(1, 2), Rat(0)));
    // Interval lengths: A spans psi^n, B spans psi^{n+1}.
    for (size_t i = 0; i + 1 < r.points.size(); ++i) {
      QuadRat len = r.points[i + 1] - r.points[i];
      if (r.intervals[i] == 'A') {
        CHECK(len == psi_pow(n));
      } else {
        CHECK(len == psi_pow(n + 1));
      }
    }
  }
  const long pairs[6] = {1, 2, 4, 7, 12, 20};
  for (long n = 1; n <= 6; ++n) {
    CHECK(Int(static_cast<long>(gd_row(n).facets.size())) == 2 * pairs[n - 1]);
  }
}

TEST_CASE("up apexes land two girdles higher") {
  for (long n = 1; n <= 8; ++n) {
    DiamondRow r = gd_row(n);
    QuadRat target = gd_row(n + 2).zeta;
    for (const Facet& f : r.facets) {
      if (f.points_up()) {
        CHECK(f.apex().second == target);
      } else {
        CHECK(f.apex().second == r.zeta - r.side);
      }
    }
  }
}

TEST_CASE("golden trapezoid rows") {
  for (long n = 1; n <= 8; ++n) {
    DiamondRow r = gt_row(n);
    CHECK(r.side == psi_pow(n));
    CHECK(r.zeta == gd_row(n).zeta);
    CHECK(r.intervals == fib_word(static_cast<int>(n)));
    CHECK(r.points.front() == -r.zeta * QuadRat(Rat(1, 2), Rat(0)));
    // The right boundary is the parallel edge x = psi - zeta/2.
    CHECK(r.points.back() == psi_q() - r.zeta * QuadRat(Rat(1, 2), Rat(0)));
  }
}

TEST_CASE("natural diamond rows") {
  DiamondRow r3 = nd_row(3);
  CHECK(r3.intervals == "ABABABA");
  CHECK(r3.side == QuadRat(Rat(1, 8), Rat(0)));
  CHECK(r3.zeta == QuadRat(Rat(7, 8), Rat(0)));
  for (long n = 1; n <= 8; ++n) {
    DiamondRow r = nd_row(n);
    CHECK(Int(static_cast<long>(r.intervals.size())) == (Int(1) << n) - 1);
    // Up apexes touch the top edge zeta = 1 exactly.
    for (const Facet& f : r.facets) {
      if (f.points_up()) CHECK(f.apex().second == QuadRat(1));
    }
  }
}

TEST_CASE("facets stay inside the outer triangle") {
  for (long n = 1; n <= 6; ++n) {
    DiamondRow r = gd_row(n);
    for (const Facet& f : r.facets) {
      auto [ax, az] = f.apex();
      // |x| <= zeta/2 along the girdle and at the apex.
      CHECK(az >= QuadRat(0));
      CHECK(az <= phi_q());
      QuadRat half = az * QuadRat(Rat(1, 2), Rat(0));
      CHECK(ax >= -half);
      CHECK(ax <= half);
    }
  }
}

TEST_CASE("two-row interval words") {
  for (long n = 1; n <= 10; ++n) {
    Word gd = row_word(DiamondKind::GD, n);
    CHECK(gd == truncate_palindrome(static_cast<int>(n) + 3));
    Word gt = row_word(DiamondKind::GT, n);
    CHECK(gt == fib_word(static_cast<int>(n) + 1));
    // GD word is the GT word two rows later minus its final two letters.
    Word longer = row_word(DiamondKind::GT, n + 2);
    CHECK(gd == longer.substr(0, longer.size() - 2));
  }
  CHECK_THROWS_AS(row_word(DiamondKind::ND, 2), DomainError);
}

TEST_CASE("row length identity") {
  for (long n = 1; n <= 40; ++n) {
    CHECK(verify_row_length_identity(n));
  }
}

TEST_CASE("area sums to one half") {
  QuadRat prev_residual(1);
  for (long N = 1; N <= 40; N += 3) {
    auto [partial, residual] = verify_area_identity(N);
    CHECK(partial + residual == QuadRat(Rat(1, 2), Rat(0)));
    CHECK(residual > QuadRat(0));
    CHECK(residual < prev_residual);
    prev_residual = residual;
  }
}

TEST_CASE("limit distances at N = 60") {
  LimitReport rep = verify_limits(60);
  CHECK(rep.all_within);
  REQUIRE(rep.entries.size() == 4);
  CHECK(rep.entries[0].name == "fib_ratio");
  CHECK(rep.entries[1].name == "fib_ratio_shifted");
  CHECK(rep.entries[2].name == "half_row_sum");
  CHECK(rep.entries[3].name == "gap_sum");
  for (const auto& e : rep.entries) {
    CHECK(e.within);
    CHECK(e.distance > QuadRat(0));
    CHECK(e.decimal.find('.') != std::string::npos);
  }
  // A tighter tolerance the terms cannot meet flips the flags.
  LimitReport tight = verify_limits(4, Rat(1, 1000000));
  CHECK_FALSE(tight.all_within);
}

TEST_CASE("cross ratio") {
  CHECK(cross_ratio(QuadRat(0), QuadRat(1), QuadRat(2), QuadRat(3)) ==
        QuadRat(Rat(4, 3), Rat(0)));
  // Degenerate exactly when a denominator factor vanishes (C == B or D == A).
  CHECK_THROWS_AS(cross_ratio(QuadRat(1), QuadRat(2), QuadRat(2), QuadRat(3)),
                  DegenerateConfiguration);
  CHECK_THROWS_AS(cross_ratio(QuadRat(3), QuadRat(1), QuadRat(2), QuadRat(3)),
                  DegenerateConfiguration);
  CHECK(gd_interval_ratio() == phi_q());
}

TEST_CASE("projection of the base grid reproduces the rows") {
  ProjectionSetup setup = gd_setup();
  for (long n = 1; n <= 4; ++n) {
    DiamondRow r = gd_row(n);
    // Domain corner c for girdle n: the rank of the last grid point.
    QuadRat c = embed(phi_pow(n + 1) - phi_pow(1));
    for (size_t k = 0; k < r.points.size(); ++k) {
      QuadRat u = embed(unrank(Int(static_cast<long>(k))));
      ImagePoint img = project(setup, u, c - u);
      CHECK(img.zeta == r.zeta);
      CHECK(img.x == r.points[k]);
    }
  }
  CHECK_THROWS_AS(project(setup, QuadRat(0), -phi_q()), PointAtInfinity);
}

TEST_CASE("one-dimensional projection lemma") {
  CHECK(project_line(phi_q(), QuadRat(1)) == QuadRat(1));
  CHECK(project_line(phi_q(), QuadRat(1) + phi_q()) == phi_q());
  // Partial sums of phi^i map to partial sums of phi^{-i}, both from i = 0.
  for (int N = 0; N <= 12; ++N) {
    QuadRat domain(0), image(0);
    for (int i = 0; i <= N; ++i) {
      domain = domain + phi_pow_q(i);
      image = image + phi_pow_q(-i);
    }
    CHECK(project_line(phi_q(), domain) == image);
  }
  CHECK_THROWS_AS(project_line(QuadRat(1), QuadRat(2)),
                  DegenerateConfiguration);
  CHECK_THROWS_AS(project_line(phi_q(), -phi_q()), PointAtInfinity);
}

TEST_CASE("cutting point counts") {
  for (long n = 1; n <= 10; ++n) {
    CuttingPoints gd = cutting_points(DiamondKind::GD, n);
    CHECK(gd.count == fib(n + 3) - 2);
    CHECK(gd.phinary_form == phi_pow(n + 1) - phi_pow(1));
    CHECK(rank(gd.phinary_form) == gd.count);
    CuttingPoints nd = cutting_points(DiamondKind::ND, n);
    CHECK(nd.count == (Int(1) << n) - 1);
    CHECK(nd.phinary_form == PhiInt(0));
  }
  CHECK_THROWS_AS(cutting_points(DiamondKind::GT, 3), DomainError);
}

TEST_CASE("cardinality equations have the same solutions") {
  auto [pow_solutions, fib_solutions] = solve_cardinality_equations();
  REQUIRE(pow_solutions.size() == 2);
  REQUIRE(fib_solutions.size() == 2);
  CHECK(pow_solutions[0] == 0);
  CHECK(pow_solutions[1] == 1);
  CHECK(fib_solutions[0] == 0);
  CHECK(fib_solutions[1] == 1);
}

TEST_CASE("svg rendering is deterministic") {
  for (const char* scene : {"gd", "gt", "nd", "projection"}) {
    std::string a = render_svg(scene, 4);
    std::string b = render_svg(scene, 4);
    CHECK(a == b);
    CHECK(a.find("<svg") != std::string::npos);
    CHECK(a.find("</svg>") != std::string::npos);
  }
  CHECK_THROWS_AS(render_svg("gd", 0), DomainError);
  CHECK_THROWS_AS(render_svg("void", 3), DomainError);
  CHECK_THROWS_AS(render_svg("gd", 21), DepthLimit);
  CHECK_THROWS_AS(render_svg("projection", 9), DepthLimit);
}

TEST_CASE("svg output matches the goldens") {
  CHECK(render_svg("gd", 6) == read_golden("gd6.svg"));
  CHECK(render_svg("gt", 6) == read_golden("gt6.svg"));
  CHECK(render_svg("nd", 5) == read_golden("nd5.svg"));
  CHECK(render_svg("projection", 4) == read_golden("projection4.svg"));
  RenderOptions no_rays;
  no_rays.perspective_lines = false;
  std::string plain = render_svg("projection", 4, no_rays);
  CHECK(plain != read_golden("projection4.svg"));
  CHECK(plain.find("<line") == std::string::npos);
}
