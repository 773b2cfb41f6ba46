#pragma once
// Exact arithmetic in Z[phi] and Q(sqrt5).
//
// PhiInt models a*phi + b with arbitrary-precision integer coefficients,
// where phi = (1+sqrt5)/2 satisfies phi^2 = phi + 1.  QuadRat models
// p + q*sqrt5 with rational components.  Every comparison and floor in
// this library routes through these types; no floating point anywhere.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace phinary {

using Int = mpz_class;
using Rat = mpq_class;

// ---------------------------------------------------------------------------
// Error taxonomy.  The CLI maps Error to exit code 1; everything a caller can
// trigger with bad-but-well-formed input derives from Error, so library code
// asserts only on internal invariants.

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Value is not a nonnegative-coefficient golden-base integer (or the signed
// extension expected by the operation).
struct NotPhinary : Error {
  using Error::Error;
};

// Operation requires a nonnegative argument.
struct NegativeInput : Error {
  using Error::Error;
};

// Digit-string input failed to parse or violates digit constraints.
struct MalformedDigits : Error {
  using Error::Error;
};

// Operation left its mathematical domain (non-exact root, bad level, ...).
struct DomainError : Error {
  using Error::Error;
};

struct DivisionByZero : DomainError {
  using DomainError::DomainError;
};

// Inverse hyperoperation has no exact preimage.
struct InverseUndefined : DomainError {
  using DomainError::DomainError;
};

// The two identity-absorbing pairs excluded from dagger power sums.
struct ExceptionalPair : DomainError {
  using DomainError::DomainError;
};

// Enumeration oracle asked to run past its configured bound.
struct OracleBoundExceeded : Error {
  using Error::Error;
};

// Occurrence scan cannot certify completeness within the window.
struct InconclusiveBound : Error {
  using Error::Error;
};

// Tree or render depth beyond the configured guard.
struct DepthLimit : Error {
  using Error::Error;
};

// Cross ratio or projection hit coincident points.
struct DegenerateConfiguration : DomainError {
  using DomainError::DomainError;
};

// Projection denominator vanished.
struct PointAtInfinity : DomainError {
  using DomainError::DomainError;
};

// Text input failed to parse.
struct ParseError : Error {
  using Error::Error;
};

// ---------------------------------------------------------------------------
// PhiInt: a*phi + b.

struct PhiInt {
  Int a;  // coefficient of phi
  Int b;  // integer part

  PhiInt() : a(0), b(0) {}
  PhiInt(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit PhiInt(long n) : a(0), b(n) {}

  friend PhiInt operator+(const PhiInt& x, const PhiInt& y) {
    return PhiInt(x.a + y.a, x.b + y.b);
  }
  friend PhiInt operator-(const PhiInt& x, const PhiInt& y) {
    return PhiInt(x.a - y.a, x.b - y.b);
  }
  friend PhiInt operator-(const PhiInt& x) { return PhiInt(-x.a, -x.b); }
  friend bool operator==(const PhiInt& x, const PhiInt& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const PhiInt& x, const PhiInt& y) { return !(x == y); }
};

// (a*phi + b)(c*phi + d) = (ac + ad + bc)*phi + (ac + bd), using phi^2 = phi+1.
PhiInt mul(const PhiInt& x, const PhiInt& y);

// Sign of the real number a*phi + b, exactly.  2*(a*phi+b) = (2b+a) + a*sqrt5,
// so the sign reduces to comparing (2b+a)^2 against 5a^2; equality with a != 0
// is impossible because sqrt5 is irrational.
int sign(const PhiInt& x);

inline bool operator<(const PhiInt& x, const PhiInt& y) {
  return sign(x - y) < 0;
}
inline bool operator<=(const PhiInt& x, const PhiInt& y) {
  return sign(x - y) <= 0;
}
inline bool operator>(const PhiInt& x, const PhiInt& y) {
  return sign(x - y) > 0;
}
inline bool operator>=(const PhiInt& x, const PhiInt& y) {
  return sign(x - y) >= 0;
}

// Fibonacci numbers, F_0 = 0, F_1 = 1.  Negative indices follow
// F_{-m} = (-1)^{m+1} F_m.  Memoized; safe for concurrent callers.
Int fib(long n);

// phi^n = F_n*phi + F_{n-1} for n >= 0.  Negative n is rejected here
// (use QuadRat phi_pow_q for the field).
PhiInt phi_pow(long n);

// Canonical text form: "3φ+2", "φ", "-2φ-1", "0".
std::string to_string(const PhiInt& x);

// Parses the canonical form plus tolerant variants ("2*phi+1", "phi + 1",
// bare integers).  Throws ParseError.
PhiInt parse_phiint(const std::string& text);

// ---------------------------------------------------------------------------
// QuadRat: p + q*sqrt5 with rational p, q.  mpq_class keeps components
// canonical (reduced, positive denominator).

struct QuadRat {
  Rat p;  // rational part
  Rat q;  // coefficient of sqrt5

  QuadRat() : p(0), q(0) {}
  QuadRat(Rat p_, Rat q_) : p(std::move(p_)), q(std::move(q_)) {}
  explicit QuadRat(long n) : p(n), q(0) {}

  friend QuadRat operator+(const QuadRat& x, const QuadRat& y) {
    return QuadRat(x.p + y.p, x.q + y.q);
  }
  friend QuadRat operator-(const QuadRat& x, const QuadRat& y) {
    return QuadRat(x.p - y.p, x.q - y.q);
  }
  friend QuadRat operator-(const QuadRat& x) { return QuadRat(-x.p, -x.q); }
  // (p + q*sqrt5)(r + s*sqrt5) = (pr + 5qs) + (ps + qr)*sqrt5.
  friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
    return QuadRat(x.p * y.p + 5 * x.q * y.q, x.p * y.q + x.q * y.p);
  }
  friend bool operator==(const QuadRat& x, const QuadRat& y) {
    return x.p == y.p && x.q == y.q;
  }
  friend bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }
};

int sign(const QuadRat& x);

inline bool operator<(const QuadRat& x, const QuadRat& y) {
  return sign(x - y) < 0;
}
inline bool operator<=(const QuadRat& x, const QuadRat& y) {
  return sign(x - y) <= 0;
}
inline bool operator>(const QuadRat& x, const QuadRat& y) {
  return sign(x - y) > 0;
}
inline bool operator>=(const QuadRat& x, const QuadRat& y) {
  return sign(x - y) >= 0;
}

// Field inverse; throws DivisionByZero at 0.  Norm p^2 - 5q^2 never vanishes
// for nonzero arguments.
QuadRat inverse(const QuadRat& x);
QuadRat operator/(const QuadRat& x, const QuadRat& y);

// Embedding Z[phi] -> Q(sqrt5): a*phi + b = (b + a/2) + (a/2)*sqrt5.
QuadRat embed(const PhiInt& x);

// phi and 1/phi as field elements.
QuadRat phi_q();
QuadRat psi_q();  // 1/phi = phi - 1 = (-1 + sqrt5)/2

// phi^n for any integer n, exactly.
QuadRat phi_pow_q(long n);

// Truncating integer square root of a nonnegative integer.
Int isqrt(const Int& n);

// floor(x) computed exactly via isqrt.
Int floor_quadrat(const QuadRat& x);

// floor(k*phi) for integer k >= 0: (k + isqrt(5k^2)) div 2.
Int floor_times_phi(const Int& k);

// Correctly rounded decimal expansion with `digits` fractional digits
// (round half away from zero on exact ties, which occur only for rational
// inputs with denominator dividing 2*10^digits).
std::string to_decimal(const QuadRat& x, int digits);

// Compact exact text: "1/2+1/2√5", "3", "-1/2+3/10√5", "1/5√5".
std::string to_string(const QuadRat& x);

std::string to_string(const Rat& r);

}  // namespace phinary
