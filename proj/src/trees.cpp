#include "phinary/trees.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "phinary/diatomic.hpp"
#include "phinary/ordinal.hpp"
#include "phinary/words.hpp"

namespace phinary {

const char* to_string(TreeKind k) {
  switch (k) {
    case TreeKind::CW:
      return "cw";
    case TreeKind::SB:
      return "sb";
    case TreeKind::PRT:
      return "prt";
    case TreeKind::PERT:
      return "pert";
  }
  return "?";
}

std::string to_string(const Fraction& f) {
  return f.num.get_str() + "/" + f.den.get_str();
}

long default_depth_limit(TreeKind k) {
  switch (k) {
    case TreeKind::CW:
    case TreeKind::SB:
      return 16;
    case TreeKind::PRT:
    case TreeKind::PERT:
      return 14;
  }
  return 0;
}

namespace {

void check_row(long n, long limit, TreeKind k) {
  if (n < 0) throw DomainError("tree row index must be nonnegative");
  if (n > limit) {
    throw DepthLimit(std::string(to_string(k)) + " row " + std::to_string(n) +
                     " beyond depth limit " + std::to_string(limit));
  }
}

}  // namespace

TreeRow calkin_wilf_row(long n, long limit) {
  check_row(n, limit, TreeKind::CW);
  TreeRow row{TreeKind::CW, n, {}};
  long width = 1L << n;
  hyperbinary_warm(2 * width);
  row.nodes.reserve(static_cast<size_t>(width));
  for (long k = 0; k < width; ++k) {
    Int a = hyperbinary(Int(width + k));
    Int b = hyperbinary(Int(2 * width - (k + 1)));
    row.nodes.push_back(Fraction{a, b});
  }
  return row;
}

TreeRow stern_brocot_row(long n, long limit) {
  check_row(n, limit, TreeKind::SB);
  TreeRow row{TreeKind::SB, n, {}};
  long width = 1L << n;
  hyperbinary_warm(2 * width);
  row.nodes.reserve(static_cast<size_t>(width));
  for (long k = 0; k < width; ++k) {
    Int a = hyperbinary(Int(2 * k));
    Int b = hyperbinary(Int(2 * width - 2 * (k + 1)));
    row.nodes.push_back(Fraction{a, b});
  }
  return row;
}

TreeRow prt_row(long n, long limit) {
  check_row(n, limit, TreeKind::PRT);
  TreeRow row{TreeKind::PRT, n, {}};
  Int width = fib(n + 2);
  assert(width.fits_slong_p());
  long w = width.get_si();
  PhiInt shift_a = phi_pow(n);
  PhiInt shift_b = phi_pow(n + 1);
  row.nodes.reserve(static_cast<size_t>(w));
  PhiInt p;  // rank 0
  for (long k = 0; k < w; ++k) {
    Int a = fib_diatomic_phi(hyperop(1, shift_a, p));
    Int b = fib_diatomic_phi(hyperop(-1, shift_b, successor(p)));
    row.nodes.push_back(Fraction{a, b});
    p = successor(p);
  }
  return row;
}

TreeRow pert_row(long n, long limit) {
  check_row(n, limit, TreeKind::PERT);
  TreeRow row{TreeKind::PERT, n, {}};
  if (n == 0) {
    // Root row: the shift degenerates, by convention the row is 1/1.
    row.nodes.push_back(Fraction{Int(1), Int(1)});
    return row;
  }
  Int width = fib(n + 2);
  assert(width.fits_slong_p());
  long w = width.get_si();
  Int top_rank = fib(n + 3);  // rank of phi^{n+1}
  row.nodes.reserve(static_cast<size_t>(w));
  PhiInt p;
  for (long k = 0; k < w; ++k) {
    Int a = fib_diatomic_phi(even_of(p));
    Int hook = top_rank - rank(even_of(successor(p)));
    Int b = hook < 0 ? Int(0) : fib_diatomic_phi(unrank(hook));
    row.nodes.push_back(Fraction{a, b});
    p = successor(p);
  }
  return row;
}

TreeRow tree_row(TreeKind k, long n, long limit) {
  switch (k) {
    case TreeKind::CW:
      return calkin_wilf_row(n, limit);
    case TreeKind::SB:
      return stern_brocot_row(n, limit);
    case TreeKind::PRT:
      return prt_row(n, limit);
    case TreeKind::PERT:
      return pert_row(n, limit);
  }
  throw DomainError("tree_row: unknown kind");
}

TreeRow stern_brocot_row_mediant(long n) {
  if (n < 0) throw DomainError("tree row index must be nonnegative");
  if (n > 20) throw DepthLimit("mediant oracle beyond row 20");
  // Boundary fractions 0/1 and 1/0; pass i inserts mediants between all
  // adjacent pairs; the row is the set inserted by pass n+1, left to right.
  std::vector<Fraction> seq{Fraction{Int(0), Int(1)}, Fraction{Int(1), Int(0)}};
  std::vector<Fraction> inserted;
  for (long pass = 0; pass <= n; ++pass) {
    std::vector<Fraction> next;
    inserted.clear();
    next.reserve(seq.size() * 2 - 1);
    for (size_t i = 0; i + 1 < seq.size(); ++i) {
      Fraction med{seq[i].num + seq[i + 1].num, seq[i].den + seq[i + 1].den};
      next.push_back(seq[i]);
      next.push_back(med);
      inserted.push_back(med);
    }
    next.push_back(seq.back());
    seq = std::move(next);
  }
  return TreeRow{TreeKind::SB, n, inserted};
}

namespace {

Fraction reduced(const Fraction& f) {
  Int g;
  mpz_gcd(g.get_mpz_t(), f.num.get_mpz_t(), f.den.get_mpz_t());
  if (g == 0) return f;
  return Fraction{f.num / g, f.den / g};
}

}  // namespace

CoverageReport verify_coverage(TreeKind k, long depth, long max_part) {
  CoverageReport rep{k, depth, max_part, 0, 0, {}, false};
  std::map<std::pair<long, long>, bool> seen;
  for (long a = 1; a <= max_part; ++a) {
    for (long b = 1; b <= max_part; ++b) {
      Int g;
      Int ia(a), ib(b);
      mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
      if (g == 1) seen[{a, b}] = false;
    }
  }
  rep.target_count = static_cast<long>(seen.size());
  for (long n = 0; n <= depth; ++n) {
    TreeRow row = tree_row(k, n, depth);
    for (const Fraction& f : row.nodes) {
      if (f.den == 0 || f.num == 0) continue;
      Fraction r = reduced(f);
      if (r.num.fits_slong_p() && r.den.fits_slong_p()) {
        auto it = seen.find({r.num.get_si(), r.den.get_si()});
        if (it != seen.end() && !it->second) {
          it->second = true;
          ++rep.distinct_found;
        }
      }
    }
  }
  for (const auto& [key, hit] : seen) {
    if (!hit) rep.missing.push_back(Fraction{Int(key.first), Int(key.second)});
  }
  rep.complete = rep.missing.empty();
  return rep;
}

std::vector<std::pair<long, long>> find_in_prt(const Fraction& f, long depth) {
  std::vector<std::pair<long, long>> hits;
  for (long n = 0; n <= depth; ++n) {
    TreeRow row = prt_row(n, depth);
    for (size_t k = 0; k < row.nodes.size(); ++k) {
      if (row.nodes[k] == f) hits.emplace_back(n, static_cast<long>(k));
    }
  }
  return hits;
}

std::string tree_dot(TreeKind k, long depth, long limit) {
  check_row(depth, limit, k);
  std::ostringstream out;
  out << "// " << to_string(k) << " rows 0.." << depth << "\n";
  bool binary = (k == TreeKind::CW || k == TreeKind::SB);
  if (!binary) {
    out << "// edge rule: node k of a row forks twice when letter k+1 of the\n"
           "// infinite Fibonacci word is A, once otherwise (drawing convention)\n";
  }
  out << "digraph " << to_string(k) << " {\n  node [shape=plaintext];\n";
  std::vector<TreeRow> rows;
  for (long n = 0; n <= depth; ++n) rows.push_back(tree_row(k, n, limit));
  for (long n = 0; n <= depth; ++n) {
    out << "  { rank=same;";
    for (size_t i = 0; i < rows[static_cast<size_t>(n)].nodes.size(); ++i) {
      out << " r" << n << "_" << i << " [label=\""
          << to_string(rows[static_cast<size_t>(n)].nodes[i]) << "\"];";
    }
    out << " }\n";
  }
  for (long n = 0; n < depth; ++n) {
    size_t parent_count = rows[static_cast<size_t>(n)].nodes.size();
    size_t child_count = rows[static_cast<size_t>(n) + 1].nodes.size();
    if (binary) {
      for (size_t i = 0; i < parent_count; ++i) {
        out << "  r" << n << "_" << i << " -> r" << (n + 1) << "_" << 2 * i << ";\n";
        out << "  r" << n << "_" << i << " -> r" << (n + 1) << "_" << (2 * i + 1)
            << ";\n";
      }
    } else {
      size_t next = 0;
      for (size_t i = 0; i < parent_count; ++i) {
        int forks = infinite_letter(Int(static_cast<long>(i) + 1)) == 'A' ? 2 : 1;
        for (int c = 0; c < forks && next < child_count; ++c, ++next) {
          out << "  r" << n << "_" << i << " -> r" << (n + 1) << "_" << next
              << ";\n";
        }
      }
      assert(next == child_count);
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace phinary
