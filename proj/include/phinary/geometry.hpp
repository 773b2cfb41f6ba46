#pragma once
// Facet rows of the golden diamond (GD), golden trapezoid (GT), and natural
// diamond (ND); row interval words; exact identity checks; cross ratios;
// perspective projections with exact Q(sqrt5) coordinates; cutting-point
// counts; and the finite cardinality-equation solver.
//
// Frame: image-plane coordinates (x, zeta).  The outer GD triangle is
// (0,0), (-phi/2, phi), (phi/2, phi); its edges are the lines x = -zeta/2
// and x = zeta/2.  A point (x, zeta) of the frame sits at (x, -x, zeta/sqrt2)
// in 3D; the sqrt2 never appears in stored coordinates.
//
// Row n (n >= 1) of the GD lives on the girdle line zeta_n = phi(1 - psi^n)
// = sum_{i=1}^{n} psi^i and is read off the infinite Fibonacci word: starting
// at the left edge, letter A spans psi^n and hosts one facet pair (an up and
// a down triangle sharing that base), letter B spans psi^{n+1} and is a gap
// (the cross-section of a row n-1 facet).  The GT uses the same girdles and
// sizes but only the first |w_n| = F_{n+1} intervals, ending on the parallel
// boundary x = psi - zeta/2.  The ND uses girdles 1 - 2^{-n}, side 2^{-n},
// and the alternating word ABAB...A.

#include <string>
#include <utility>
#include <vector>

#include "phinary/core.hpp"
#include "phinary/words.hpp"

namespace phinary {

enum class DiamondKind { GD, GT, ND };

const char* to_string(DiamondKind k);

struct Facet {
  DiamondKind kind;
  long row;    // 1-based girdle row
  long index;  // 0-based within the row; even = apex up, odd = apex down
  QuadRat side;
  std::pair<QuadRat, QuadRat> base_left;  // (x, zeta) of the base's left end

  bool points_up() const { return index % 2 == 0; }
  // Apex of the triangle: (base_x + side/2, zeta +/- side).
  std::pair<QuadRat, QuadRat> apex() const;
};

struct DiamondRow {
  DiamondKind kind;
  long row;
  QuadRat side;
  QuadRat zeta;                 // girdle height
  std::vector<QuadRat> points;  // interval endpoints, left to right
  Word intervals;               // one letter per gap between points
  std::vector<Facet> facets;    // 2 * (number of A intervals)
};

long default_row_limit(DiamondKind k);  // 20 for all three

DiamondRow gd_row(long n, long limit = default_row_limit(DiamondKind::GD));
DiamondRow gt_row(long n, long limit = default_row_limit(DiamondKind::GT));
DiamondRow nd_row(long n, long limit = default_row_limit(DiamondKind::ND));
DiamondRow diamond_row(DiamondKind k, long n, long limit);

// The interval word across rows n and n+1 read on girdle n+1: letter A for
// each row n+1 facet pair, B for each gap cut by a row n facet.
// GD: the palindromic prefix fib_word(n+3) minus its final two letters.
// GT: exactly fib_word(n+1).
Word row_word(DiamondKind k, long n, long limit = 20);

// Exact partial sum of sum_{n=1}^{N} (F_{n+2}-1) / phi^{2n+2} and the
// residual 1/2 - partial_sum (positive, strictly decreasing).
std::pair<QuadRat, QuadRat> verify_area_identity(long N);

// (F_{n+2}-1)/phi^n + (F_{n+1}-1)/phi^{n+1} == sum_{i=1}^{n} phi^{-i},
// exactly.  Returns the comparison result; true for every n >= 1.
bool verify_row_length_identity(long n);

// Distances of the Nth terms from their limits, exact comparisons against a
// rational tolerance plus decimal renderings for the report.
struct LimitReport {
  long N;
  // fib ratio F_N / phi^{N-1}            -> phi/sqrt5      = 1/2 + (1/10) sqrt5
  // shifted ratio F_{N-1} / phi^N        -> 1/(phi sqrt5)  = 1/2 - (1/10) sqrt5
  // half row sum (F_{N+2}-1) psi^N       -> phi^2/sqrt5    = 1/2 + (3/10) sqrt5
  // gap sum (F_{N+1}-1) psi^{N+1}        -> 1/sqrt5        = (1/5) sqrt5
  struct Entry {
    std::string name;
    QuadRat distance;      // |term - limit|, exact
    std::string decimal;   // 12-digit rendering of the distance
    bool within;           // distance < tolerance
  };
  std::vector<Entry> entries;
  bool all_within;
};
LimitReport verify_limits(long N, const Rat& tolerance = Rat(1, 10000000000L));

// (AC * BD) / (BC * AD) for collinear points given by parameter values.
// Throws DegenerateConfiguration when a denominator factor vanishes.
QuadRat cross_ratio(const QuadRat& a, const QuadRat& b, const QuadRat& c,
                    const QuadRat& d);

// The adjacent-interval ratio forced by the GD cross-ratio configuration
// AB = psi, BC = CD = psi^2/2: solves (x+1)^2 = phi (2x+1), giving x = phi.
QuadRat gd_interval_ratio();

// ---------------------------------------------------------------------------
// Perspective projection onto the plane x + y = 0.

struct ProjectionSetup {
  QuadRat focal_xy;      // focal point (f, f, h/sqrt2) has x = y = f
  QuadRat focal_height;  // h: the sqrt2-scaled z of the focal point
};

ProjectionSetup gd_setup();  // (-phi/2, -phi/2, phi/sqrt2)
ProjectionSetup nd_setup();  // (-1/2, -1/2, 1/sqrt2)

struct ImagePoint {
  QuadRat x;     // frame x
  QuadRat zeta;  // frame height (sqrt2-scaled z)
};

// Image of the domain point (u, v, 0).  Throws PointAtInfinity when the
// point lies on the focal plane u + v = 2f.
ImagePoint project(const ProjectionSetup& setup, const QuadRat& u, const QuadRat& v);

// One-dimensional projection lemma: focal (-d, h) with d = -1/(1-r),
// h = r/(r-1) maps x to h*x/(d+x); partial sums of r^i map to partial sums
// of r^{-i}.  Throws DegenerateConfiguration for r = 1, PointAtInfinity at
// x = -d.
QuadRat project_line(const QuadRat& r, const QuadRat& x);

// Number of grid segments along the projected row n: GD F_{n+3}-2 (returned
// with its phinary witness unrank(F_{n+3}-2) = phi^{n+1} - phi), ND 2^n - 1.
struct CuttingPoints {
  Int count;
  PhiInt phinary_form;  // GD only; zero for ND
};
CuttingPoints cutting_points(DiamondKind k, long n, long limit = 20);

// Exhaustive search on [0, 64]: solutions of x = 2^x - 1 and x = F_{x+3} - 2.
std::pair<std::vector<long>, std::vector<long>> solve_cardinality_equations();

// ---------------------------------------------------------------------------
// Rendering.

struct RenderOptions {
  bool perspective_lines = true;  // rays in the projection scene
  int decimals = 12;
};

// scene: "gd", "gt", "nd", or "projection".  Deterministic SVG 1.1, all
// coordinates printed from exact values.  Throws DomainError for depth < 1
// or an unknown scene, DepthLimit past the row limit.
std::string render_svg(const std::string& scene, long depth,
                       const RenderOptions& options = {});

}  // namespace phinary
