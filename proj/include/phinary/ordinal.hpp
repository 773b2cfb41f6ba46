#pragma once
// The ordering of the golden-base integers: successor and predecessor,
// the rank bijection with Z, hyperoperations transported along it, and the
// three-way parity classification.

#include <utility>

#include "phinary/core.hpp"

namespace phinary {

// Signed membership: x or -x is a nonnegative golden-base integer.
bool is_phinary_signed(const PhiInt& x);

// Position of x in the increasing enumeration of the signed golden-base
// integers, with rank(0) = 0, rank(1) = 1, rank(phi) = 2, ...
// and rank(-x) = -rank(x).  Throws NotPhinary.
Int rank(const PhiInt& x);

// Inverse of rank, total on Z.
PhiInt unrank(const Int& n);

// Next golden-base integer above x.  The increment from rank n-1 to rank n
// is 1 when letter n of the infinite Fibonacci word is A, else psi = phi-1.
PhiInt successor(const PhiInt& x);

// Previous golden-base integer below x.
PhiInt predecessor(const PhiInt& x);

// Order-reversing negation.
PhiInt mirror(const PhiInt& x);

// The increment between ranks n-1 and n (n >= 1): 1 or phi-1.
PhiInt rank_step(const Int& n);

// Hyperoperation ladder transported along rank.  Levels:
//    0 successor of q        3 bar-exp (rank power)
//    1 dagger (rank sum)    -1 hook (rank difference, total)
//    2 star (rank product)  -2 stripe (exact rank quotient)
//                           -3 bar-root (exact integer rank root)
// Throws DivisionByZero (stripe by rank 0), InverseUndefined (inexact
// stripe), DomainError (bad level, negative or oversized exponent,
// inexact root).
PhiInt hyperop(int level, const PhiInt& p, const PhiInt& q);

// Direct recursion on the successor, without rank arithmetic:
//   B(0, p, q) = successor(q)
//   B(n, p, 0) = p, 0, 1 for n = 1, 2, >= 3
//   B(n, p, q) = B(n-1, p, B(n, p, predecessor(q)))
// Levels 0..3, q >= 0 only; guarded by a work counter (DepthLimit).
// Exists to cross-check hyperop at small ranks.
PhiInt hyperop_recursive(int level, const PhiInt& p, const PhiInt& q,
                         long work_limit = 10'000'000);

// p dagger phi^k for phinary p <= phi^k.  Equal to the plain ring sum
// p + phi^k everywhere it is defined; the two pairs whose sum leaves the
// golden-base integers, (k=0, p=1) and (k=1, p=phi), throw ExceptionalPair.
PhiInt dagger_power_sum(const PhiInt& p, long k);

// ---------------------------------------------------------------------------
// Parity triplet.  Every nonnegative golden-base integer p is exactly one of
//   even:    p = phi^2 q
//   odd:     p = phi^2 q + 1
//   curious: p = phi^3 q + phi
// with q ranging over the nonnegative golden-base integers (including 0).

enum class Parity { even, odd, curious };

const char* to_string(Parity c);

// The three constructor maps.
PhiInt even_of(const PhiInt& q);
PhiInt odd_of(const PhiInt& q);
PhiInt curious_of(const PhiInt& q);

// Classification by exact algebraic inversion of the three maps
// (1/phi^2 = 2 - phi, 1/phi^3 = 2 phi - 3) plus membership tests.
Parity parity(const PhiInt& p);

// Classification from the final digits of the standard expansion:
// ...1 -> odd, ...10 -> curious, ...00 or "0" -> even.
Parity parity_suffix(const PhiInt& p);

// Classification together with the witness q.
std::pair<Parity, PhiInt> parity_decompose(const PhiInt& p);

}  // namespace phinary
