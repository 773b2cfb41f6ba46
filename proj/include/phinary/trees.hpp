#pragma once
// Four rational-generating trees read off diatomic sequences:
//   CW    Calkin-Wilf rows from the hyperbinary sequence
//   SB    Stern-Brocot rows from the same sequence, reindexed
//   PRT   rows from the Fibonacci diatomic count along dagger/hook shifts
//   PERT  rows from the same count along even-map shifts
// plus coverage verification, search, a mediant oracle, and DOT export.

#include <string>
#include <utility>
#include <vector>

#include "phinary/core.hpp"

namespace phinary {

enum class TreeKind { CW, SB, PRT, PERT };

const char* to_string(TreeKind k);

struct Fraction {
  Int num;
  Int den;
  friend bool operator==(const Fraction& x, const Fraction& y) {
    return x.num == y.num && x.den == y.den;
  }
};

std::string to_string(const Fraction& f);

struct TreeRow {
  TreeKind kind;
  long n;
  std::vector<Fraction> nodes;
};

// Default row guards; the CLI can widen them via PHINARY_DEPTH_LIMIT.
long default_depth_limit(TreeKind k);  // CW/SB 16, PRT/PERT 14

// Row n (0-based).  Throws DepthLimit past the limit, DomainError for n < 0.
TreeRow calkin_wilf_row(long n, long limit = default_depth_limit(TreeKind::CW));
TreeRow stern_brocot_row(long n, long limit = default_depth_limit(TreeKind::SB));
TreeRow prt_row(long n, long limit = default_depth_limit(TreeKind::PRT));
TreeRow pert_row(long n, long limit = default_depth_limit(TreeKind::PERT));
TreeRow tree_row(TreeKind k, long n, long limit);

// Independent Stern-Brocot oracle: the fractions inserted by the n-th
// mediant pass between 0/1 and 1/0.
TreeRow stern_brocot_row_mediant(long n);

// Did rows 0..depth produce every reduced fraction with both parts in
// 1..max_part?  Nodes are reduced before matching; zero denominators skipped.
struct CoverageReport {
  TreeKind kind;
  long depth;
  long max_part;
  long target_count;
  long distinct_found;
  std::vector<Fraction> missing;
  bool complete;
};
CoverageReport verify_coverage(TreeKind k, long depth, long max_part);

// All (row, index) positions of an exact node match in PRT rows 0..depth.
std::vector<std::pair<long, long>> find_in_prt(const Fraction& f, long depth);

// Graphviz export of rows 0..depth.  CW/SB use the binary child order
// (k -> 2k, 2k+1).  PRT/PERT rows are not binary; edges follow the
// Fibonacci-substitution unfolding (node k of row n has two children when
// letter k+1 of the infinite Fibonacci word is A, one child otherwise),
// which tiles the next row exactly.  That edge rule is a visualization
// convention; the row contents are the data.
std::string tree_dot(TreeKind k, long depth, long limit);

}  // namespace phinary
