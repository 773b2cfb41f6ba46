#include "phinary/ordinal.hpp"

#include <cassert>

#include "phinary/codec.hpp"

namespace phinary {

namespace {

// Rank of a validated nonnegative golden-base integer a*phi + b.  rank is
// linear in the coefficients, which is what transports sums along it.
Int rank_nonneg(const PhiInt& x) { return 2 * x.a + x.b; }

void require_phinary(const PhiInt& x, const char* who) {
  if (!is_phinary(x)) {
    throw NotPhinary(std::string(who) + ": " + to_string(x) +
                     " is not a golden-base integer");
  }
}

void require_phinary_signed(const PhiInt& x, const char* who) {
  if (!is_phinary_signed(x)) {
    throw NotPhinary(std::string(who) + ": " + to_string(x) +
                     " is not a signed golden-base integer");
  }
}

}  // namespace

bool is_phinary_signed(const PhiInt& x) {
  return sign(x) >= 0 ? is_phinary(x) : is_phinary(-x);
}

Int rank(const PhiInt& x) {
  if (sign(x) < 0) {
    PhiInt m = -x;
    require_phinary(m, "rank");
    return -rank_nonneg(m);
  }
  require_phinary(x, "rank");
  return rank_nonneg(x);
}

PhiInt unrank(const Int& n) {
  if (n < 0) return -unrank(Int(-n));
  // a = floor((n+1)/phi^2): with m = n+1, the floor equals
  // floor((3m - isqrt(5 m^2)) / 2) shifted by the parity split below.
  Int m = n + 1;
  Int s = isqrt(5 * m * m);
  Int q = 3 * m - s;
  Int a = (q % 2 == 0) ? Int(q / 2 - 1) : Int(q / 2);
  Int b = n - 2 * a;
  PhiInt out(a, b);
  assert(is_phinary(out));
  assert(rank_nonneg(out) == n);
  return out;
}

PhiInt rank_step(const Int& n) {
  if (n < 1) throw DomainError("rank_step: steps are 1-based");
  Int delta = floor_times_phi(n + 1) - floor_times_phi(n) - 1;
  return delta == 1 ? PhiInt(Int(0), Int(1)) : PhiInt(Int(1), Int(-1));
}

PhiInt successor(const PhiInt& x) {
  if (sign(x) < 0) return -predecessor(-x);
  require_phinary(x, "successor");
  return x + rank_step(rank_nonneg(x) + 1);
}

PhiInt predecessor(const PhiInt& x) {
  int s = sign(x);
  if (s < 0) return -successor(-x);
  if (s == 0) return PhiInt(Int(0), Int(-1));
  require_phinary(x, "predecessor");
  return x - rank_step(rank_nonneg(x));
}

PhiInt mirror(const PhiInt& x) {
  require_phinary_signed(x, "mirror");
  return -x;
}

PhiInt hyperop(int level, const PhiInt& p, const PhiInt& q) {
  if (level < -3 || level > 3) throw DomainError("hyperop: level out of range");
  Int rp = rank(p);
  Int rq = rank(q);
  switch (level) {
    case 0:
      return successor(q);
    case 1:
      return unrank(rp + rq);
    case -1:
      return unrank(rp - rq);
    case 2:
      return unrank(rp * rq);
    case -2: {
      if (rq == 0) throw DivisionByZero("stripe: divisor has rank 0");
      Int quot, rem;
      mpz_tdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), rp.get_mpz_t(),
                  rq.get_mpz_t());
      if (rem != 0) throw InverseUndefined("stripe: ranks do not divide exactly");
      return unrank(quot);
    }
    case 3: {
      if (rq < 0) throw DomainError("bar-exp: negative exponent");
      if (rq == 0) return unrank(Int(1));
      if (rp == 0) return unrank(Int(0));
      if (rp == 1) return unrank(Int(1));
      if (rp == -1) return unrank(Int(rq % 2 == 0 ? 1 : -1));
      if (rq > 4096) throw DomainError("bar-exp: exponent too large");
      Int out;
      mpz_pow_ui(out.get_mpz_t(), rp.get_mpz_t(), rq.get_ui());
      return unrank(out);
    }
    case -3: {
      if (rq <= 0) throw DomainError("bar-root: root index must be positive");
      if (rq % 2 == 0 && rp < 0) throw DomainError("bar-root: even root of negative rank");
      if (!rq.fits_ulong_p()) throw DomainError("bar-root: root index too large");
      Int root;
      int exact = mpz_root(root.get_mpz_t(), rp.get_mpz_t(), rq.get_ui());
      if (!exact) throw DomainError("bar-root: rank is not a perfect power");
      return unrank(root);
    }
    default:
      throw DomainError("hyperop: unreachable level");
  }
}

namespace {

PhiInt hyperop_rec_impl(int level, const PhiInt& p, const PhiInt& q, long& fuel) {
  if (--fuel < 0) throw DepthLimit("hyperop_recursive: work limit exceeded");
  if (level == 0) return successor(q);
  if (sign(q) == 0) {
    if (level == 1) return p;
    if (level == 2) return PhiInt();
    return PhiInt(Int(0), Int(1));
  }
  PhiInt inner = hyperop_rec_impl(level, p, predecessor(q), fuel);
  return hyperop_rec_impl(level - 1, p, inner, fuel);
}

}  // namespace

PhiInt hyperop_recursive(int level, const PhiInt& p, const PhiInt& q,
                         long work_limit) {
  if (level < 0 || level > 3) {
    throw DomainError("hyperop_recursive: level must be 0..3");
  }
  if (level >= 1 && sign(q) < 0) {
    throw DomainError("hyperop_recursive: second operand must be nonnegative");
  }
  require_phinary_signed(p, "hyperop_recursive");
  require_phinary_signed(q, "hyperop_recursive");
  long fuel = work_limit;
  return hyperop_rec_impl(level, p, q, fuel);
}

PhiInt dagger_power_sum(const PhiInt& p, long k) {
  if (k < 0) throw DomainError("dagger_power_sum: negative power");
  require_phinary(p, "dagger_power_sum");
  PhiInt pk = phi_pow(k);
  if (p > pk) throw DomainError("dagger_power_sum: summand exceeds phi^k");
  if ((k == 0 && p == PhiInt(Int(0), Int(1))) || (k == 1 && p == PhiInt(Int(1), Int(0)))) {
    throw ExceptionalPair("dagger_power_sum: sum leaves the golden-base integers");
  }
  PhiInt out = p + pk;
  // Rank linearity: the ring sum realizes the rank sum.
  assert(rank_nonneg(out) == rank_nonneg(p) + fib(k + 2));
  assert(is_phinary(out));
  return out;
}

const char* to_string(Parity c) {
  switch (c) {
    case Parity::even:
      return "even";
    case Parity::odd:
      return "odd";
    case Parity::curious:
      return "curious";
  }
  return "?";
}

PhiInt even_of(const PhiInt& q) { return mul(q, PhiInt(Int(1), Int(1))); }

PhiInt odd_of(const PhiInt& q) {
  return even_of(q) + PhiInt(Int(0), Int(1));
}

PhiInt curious_of(const PhiInt& q) {
  return mul(q, PhiInt(Int(2), Int(1))) + PhiInt(Int(1), Int(0));
}

std::pair<Parity, PhiInt> parity_decompose(const PhiInt& p) {
  require_phinary(p, "parity");
  // Invert the three maps exactly: 1/phi^2 = 2 - phi, 1/phi^3 = 2 phi - 3.
  PhiInt qe = mul(p, PhiInt(Int(-1), Int(2)));
  if (is_phinary(qe)) return {Parity::even, qe};
  PhiInt qo = mul(p - PhiInt(Int(0), Int(1)), PhiInt(Int(-1), Int(2)));
  if (is_phinary(qo)) return {Parity::odd, qo};
  PhiInt qc = mul(p - PhiInt(Int(1), Int(0)), PhiInt(Int(2), Int(-3)));
  if (is_phinary(qc)) return {Parity::curious, qc};
  // The triplet partitions the golden-base integers.
  assert(false && "parity: no class matched");
  throw Error("parity: classification failed");
}

Parity parity(const PhiInt& p) { return parity_decompose(p).first; }

Parity parity_suffix(const PhiInt& p) {
  require_phinary(p, "parity_suffix");
  std::string d = encode_standard(p).int_digits;
  assert(!d.empty());
  if (d.back() == '1') return Parity::odd;
  if (d.size() >= 2 && d[d.size() - 2] == '1') return Parity::curious;
  return Parity::even;
}

}  // namespace phinary
