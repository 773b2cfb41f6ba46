#pragma once
// Diatomic sequences and their representation counts:
//   hyperbinary(n)          reps of n as sums of powers of 2, each used <= 2x
//   fib_diatomic_nat(n)     reps of n as sums of distinct Fibonacci numbers
//   fib_diatomic_phi(p)     reps of phinary p as sums of distinct phi powers
// plus the recurrence that computes fib_diatomic_phi by parity descent,
// Zeckendorf expansions, Fibonacci multiplication, and occurrence scans.

#include <vector>

#include "phinary/core.hpp"
#include "phinary/ordinal.hpp"

namespace phinary {

// Stern-like hyperbinary count: H(0) = 1, H(2n+1) = H(n),
// H(2n+2) = H(n) + H(n+1).  Memoized; safe for concurrent callers.
Int hyperbinary(const Int& n);

// Pre-extends the hyperbinary table so later lookups below n are lock-cheap.
void hyperbinary_warm(long n);

// All multisets of exponents e (descending) with sum 2^e = n, each exponent
// used at most twice.  Enumeration bound guards runaway inputs.
std::vector<std::vector<long>> hyperbinary_reps(const Int& n, long bound = 4096);

// Count of representations of n as a sum of distinct Fibonacci numbers
// F_k, k >= 2 (so 1 is available once), by direct enumeration.
Int fib_diatomic_nat(const Int& n);

// The index multisets themselves, each sorted descending.
std::vector<std::vector<long>> fib_diatomic_reps(const Int& n);

// Count of representations of phinary p as a sum of distinct powers phi^k,
// k >= 0 (consecutive exponents allowed), by direct enumeration.
// Bound guards the rank of p.
std::vector<std::vector<long>> hyperphinary_reps(const PhiInt& p, long rank_bound = 2000);

// Same count through the parity recurrence:
//   F(0) = F(1) = F(phi) = 1
//   F(phi^2 q + 1)   = F(phi q)                (odd)
//   F(phi^3 q + phi) = F(phi^2 q + 1)          (curious)
//   F(phi^2 q)       = F(pred q) + F(q), q >= 1 (even)
// Memoized by rank; safe for concurrent callers.
Int fib_diatomic_phi(const PhiInt& p);

// Pre-extends the rank-indexed memo through rank n.
void fib_diatomic_phi_warm(long max_rank);

// Zeckendorf expansion: the unique set of nonconsecutive indices k >= 2 with
// sum F_k = n, descending.  Throws NegativeInput.
std::vector<long> zeckendorf(const Int& n);

// Fibonacci multiplication: with a = sum F_{c_i}, b = sum F_{d_j} Zeckendorf,
// a mult b = sum_{i,j} F_{c_i + d_j}.
Int fib_mult(const Int& a, const Int& b);

// The phinary analogue on golden-base integers: digits of a and b at
// positions c_i, d_j give sum_{i,j} phi^{c_i + d_j}.  Equals ring
// multiplication exactly, which the tests assert.
PhiInt phi_circ(const PhiInt& a, const PhiInt& b);

// Euler totient by trial division; small inputs only.
Int totient(const Int& v);

// Even indices m <= bound with hyperbinary(m) = v.  These are the canonical
// first occurrences; odd-index copies repeat earlier values.  Reports
// phi(v)-related expectations without asserting them.  Throws
// InconclusiveBound if an occurrence lands in the final half of the window,
// since the scan can then not certify it saw the full set.
struct OccurrenceReport {
  Int value;
  Int bound;
  std::vector<Int> indices;
  Int totient_of_value;
};
OccurrenceReport primary_occurrences(const Int& v, const Int& bound);

}  // namespace phinary
