#pragma once
// Base-phi digit strings: standard (Bergman) form, the carry/split
// normalization engine, and membership testing for the golden-base integers.

#include <map>
#include <string>

#include "phinary/core.hpp"

namespace phinary {

// Digit expansion sum_k d_k phi^k with d_k in {0,1} and no two adjacent 1s
// (standard form).  int_digits holds positions msb..0, frac_digits holds
// positions -1..-len.  Both strings use characters '0'/'1'; int_digits is
// never empty ("0" for zero) and has no leading zero unless it is "0";
// frac_digits has no trailing zero.
struct PhiDigits {
  std::string int_digits{"0"};
  std::string frac_digits;
};

// "1001.1001", "101", "0".
std::string to_string(const PhiDigits& d);

// Inverse of to_string; accepts only '0'/'1' and at most one '.'.
// Throws MalformedDigits.
PhiDigits parse_digits(const std::string& text);

// Unnormalized expansion: position -> nonnegative digit count.
struct RawDigits {
  std::map<long, Int> digits;
};

// Exact value of an expansion in Q(sqrt5).
QuadRat value_of(const PhiDigits& d);
QuadRat value_of(const RawDigits& d);

// Rewrites an arbitrary expansion to standard form by repeated
//   split: 2 at k      -> 1 at k+1, 1 at k-2     (2phi^k = phi^{k+1} + phi^{k-2})
//   carry: 1 at k, k-1 -> 1 at k+1               (phi^k + phi^{k-1} = phi^{k+1})
// Terminates because the potential sum_k d_k (3/2)^k strictly decreases under
// both rules and positions below -64 are rejected.  Throws DomainError if the
// expansion needs more than 64 fractional positions.
PhiDigits normalize(const RawDigits& raw);

// Standard form of the natural number n (seed digit n at position 0).
// Throws NegativeInput.
PhiDigits encode_natural(const Int& n);

// Standard form of a nonnegative phinary value by greedy descent over
// phi powers.  Produces no fractional digits for members of the golden-base
// integers; throws NotPhinary otherwise (including all negative inputs).
PhiDigits encode_standard(const PhiInt& x);

// Exact value of a standard-form expansion as an element of Z[phi].
// Fractional digits are folded in via phi^{-k} = F_{-k} phi + F_{-k-1}.
PhiInt decode(const PhiDigits& d);

// Membership in the nonnegative golden-base integers: x >= 0 and the greedy
// expansion of x uses no fractional digits.
bool is_phinary(const PhiInt& x);

}  // namespace phinary
