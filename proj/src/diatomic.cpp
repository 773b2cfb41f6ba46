#include "phinary/diatomic.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "phinary/codec.hpp"

namespace phinary {

namespace {

constexpr long kHyperbinaryTableCap = 1L << 26;

// Dense hyperbinary table H[0..], grown in place.  Readers take a shared
// lock; growth takes the exclusive lock.
std::shared_mutex g_hb_mutex;
std::vector<Int> g_hb{Int(1)};  // H(0) = 1

void hb_grow_locked(long n) {
  while (static_cast<long>(g_hb.size()) <= n) {
    long i = static_cast<long>(g_hb.size());
    if (i % 2 == 1) {
      g_hb.push_back(g_hb[static_cast<size_t>((i - 1) / 2)]);
    } else {
      long k = i / 2 - 1;
      g_hb.push_back(g_hb[static_cast<size_t>(k)] + g_hb[static_cast<size_t>(k + 1)]);
    }
  }
}

}  // namespace

Int hyperbinary(const Int& n) {
  if (n < 0) throw NegativeInput("hyperbinary of negative index");
  if (!n.fits_slong_p() || n.get_si() > kHyperbinaryTableCap) {
    throw Error("hyperbinary: index too large for the dense table");
  }
  long i = n.get_si();
  {
    std::shared_lock<std::shared_mutex> lock(g_hb_mutex);
    if (i < static_cast<long>(g_hb.size())) return g_hb[static_cast<size_t>(i)];
  }
  std::unique_lock<std::shared_mutex> lock(g_hb_mutex);
  hb_grow_locked(i);
  return g_hb[static_cast<size_t>(i)];
}

void hyperbinary_warm(long n) {
  if (n < 0) return;
  if (n > kHyperbinaryTableCap) throw Error("hyperbinary_warm: beyond table cap");
  std::unique_lock<std::shared_mutex> lock(g_hb_mutex);
  hb_grow_locked(n);
}

namespace {

void hb_reps_dfs(const Int& remaining, long e, std::vector<long>& prefix,
                 std::vector<std::vector<long>>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  if (e < 0) return;
  // Everything below e can contribute at most 2*(2^{e+1} - 1).
  Int cap = Int(1);
  cap <<= static_cast<unsigned long>(e + 2);
  if (remaining > cap - 2) return;
  Int pw = Int(1);
  pw <<= static_cast<unsigned long>(e);
  int max_uses = 2;
  if (pw * 2 > remaining) max_uses = (pw <= remaining) ? 1 : 0;
  for (int uses = max_uses; uses >= 0; --uses) {
    Int used = pw * uses;
    for (int i = 0; i < uses; ++i) prefix.push_back(e);
    hb_reps_dfs(remaining - used, e - 1, prefix, out);
    for (int i = 0; i < uses; ++i) prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long>> hyperbinary_reps(const Int& n, long bound) {
  if (n < 0) throw NegativeInput("hyperbinary_reps of negative value");
  if (n > bound) throw OracleBoundExceeded("hyperbinary_reps: value beyond bound");
  std::vector<std::vector<long>> out;
  std::vector<long> prefix;
  long e = 0;
  while ((Int(1) << static_cast<unsigned long>(e + 1)) <= n) ++e;
  hb_reps_dfs(n, e, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Shared with the counting variant: sum of F_2..F_k is F_{k+2} - 2.
void fib_reps_dfs(const Int& remaining, long k, std::vector<long>* prefix,
                  std::vector<std::vector<long>>* out, Int* count) {
  if (remaining == 0) {
    if (out) out->push_back(*prefix);
    if (count) ++*count;
    return;
  }
  if (k < 2) return;
  if (remaining > fib(k + 2) - 2) return;
  // Take F_k or skip it; distinct indices, so both branches drop to k-1.
  Int fk = fib(k);
  if (fk <= remaining) {
    if (prefix) prefix->push_back(k);
    fib_reps_dfs(remaining - fk, k - 1, prefix, out, count);
    if (prefix) prefix->pop_back();
  }
  fib_reps_dfs(remaining, k - 1, prefix, out, count);
}

long fib_index_bound(const Int& n) {
  long k = 2;
  while (fib(k + 1) <= n) ++k;
  return k;
}

void check_fib_oracle_input(const Int& n) {
  if (n < 0) throw NegativeInput("fibonacci partition oracle of negative value");
  if (n > Int("1000000000")) {
    throw OracleBoundExceeded("fibonacci partition oracle: value beyond 1e9");
  }
}

}  // namespace

Int fib_diatomic_nat(const Int& n) {
  check_fib_oracle_input(n);
  if (n == 0) return Int(1);
  Int count(0);
  fib_reps_dfs(n, fib_index_bound(n), nullptr, nullptr, &count);
  return count;
}

std::vector<std::vector<long>> fib_diatomic_reps(const Int& n) {
  check_fib_oracle_input(n);
  std::vector<std::vector<long>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<long> prefix;
  fib_reps_dfs(n, fib_index_bound(n), &prefix, &out, nullptr);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Sum of phi^0..phi^k is phi^{k+2} - phi.
PhiInt phi_prefix_sum(long k) {
  return phi_pow(k + 2) - PhiInt(Int(1), Int(0));
}

void hyperphinary_dfs(const PhiInt& remaining, long k, std::vector<long>& prefix,
                      std::vector<std::vector<long>>& out) {
  int s = sign(remaining);
  if (s == 0) {
    out.push_back(prefix);
    return;
  }
  if (s < 0 || k < 0) return;
  if (remaining > phi_prefix_sum(k)) return;
  PhiInt pk = phi_pow(k);
  if (pk <= remaining) {
    prefix.push_back(k);
    hyperphinary_dfs(remaining - pk, k - 1, prefix, out);
    prefix.pop_back();
  }
  hyperphinary_dfs(remaining, k - 1, prefix, out);
}

}  // namespace

std::vector<std::vector<long>> hyperphinary_reps(const PhiInt& p, long rank_bound) {
  if (!is_phinary(p)) throw NotPhinary("hyperphinary_reps: " + to_string(p));
  if (rank(p) > rank_bound) {
    throw OracleBoundExceeded("hyperphinary_reps: rank beyond bound");
  }
  std::vector<std::vector<long>> out;
  if (sign(p) == 0) {
    out.push_back({});
    return out;
  }
  long k = 0;
  while (phi_pow(k + 1) <= p) ++k;
  std::vector<long> prefix;
  hyperphinary_dfs(p, k, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::shared_mutex g_fdp_mutex;
std::map<Int, Int> g_fdp_memo;

Int fdp_rank_key(const PhiInt& p) { return 2 * p.a + p.b; }

Int fdp_compute(const PhiInt& p);

Int fdp_lookup(const PhiInt& p) {
  Int key = fdp_rank_key(p);
  {
    std::shared_lock<std::shared_mutex> lock(g_fdp_mutex);
    auto it = g_fdp_memo.find(key);
    if (it != g_fdp_memo.end()) return it->second;
  }
  Int v = fdp_compute(p);
  std::unique_lock<std::shared_mutex> lock(g_fdp_mutex);
  g_fdp_memo.emplace(key, v);
  return v;
}

Int fdp_compute(const PhiInt& p) {
  Int r = fdp_rank_key(p);
  if (r <= 2) return Int(1);  // 0, 1, phi each have one representation
  auto [cls, q] = parity_decompose(p);
  switch (cls) {
    case Parity::odd:
      // F(phi^2 q + 1) = F(phi q); the argument has strictly smaller rank.
      return fdp_lookup(mul(q, PhiInt(Int(1), Int(0))));
    case Parity::curious:
      // F(phi^3 q + phi) = F(phi^2 q + 1).
      return fdp_lookup(odd_of(q));
    case Parity::even:
      // F(phi^2 q) = F(pred q) + F(q) for q >= 1.
      return fdp_lookup(predecessor(q)) + fdp_lookup(q);
  }
  throw Error("fib_diatomic_phi: unreachable");
}

}  // namespace

Int fib_diatomic_phi(const PhiInt& p) {
  if (!is_phinary(p)) throw NotPhinary("fib_diatomic_phi: " + to_string(p));
  return fdp_lookup(p);
}

void fib_diatomic_phi_warm(long max_rank) {
  for (long r = 0; r <= max_rank; ++r) {
    fdp_lookup(unrank(Int(r)));
  }
}

std::vector<long> zeckendorf(const Int& n) {
  if (n < 0) throw NegativeInput("zeckendorf of negative value");
  std::vector<long> out;
  if (n == 0) return out;
  long k = 2;
  while (fib(k + 1) <= n) ++k;
  Int rem = n;
  long prev = k + 2;
  while (rem > 0) {
    while (fib(k) > rem) --k;
    // Greedy leaves rem < F_{k-1}, so indices are never consecutive.
    assert(k <= prev - 2);
    out.push_back(k);
    rem -= fib(k);
    prev = k;
    k = std::max(2L, k - 2);
  }
  return out;
}

Int fib_mult(const Int& a, const Int& b) {
  std::vector<long> ca = zeckendorf(a);
  std::vector<long> cb = zeckendorf(b);
  Int out(0);
  for (long ci : ca) {
    for (long dj : cb) {
      out += fib(ci + dj);
    }
  }
  return out;
}

PhiInt phi_circ(const PhiInt& a, const PhiInt& b) {
  PhiDigits da = encode_standard(a);
  PhiDigits db = encode_standard(b);
  if (!da.frac_digits.empty() || !db.frac_digits.empty()) {
    throw NotPhinary("phi_circ: operands must be golden-base integers");
  }
  std::vector<long> ca, cb;
  long ta = static_cast<long>(da.int_digits.size()) - 1;
  for (size_t i = 0; i < da.int_digits.size(); ++i) {
    if (da.int_digits[i] == '1') ca.push_back(ta - static_cast<long>(i));
  }
  long tb = static_cast<long>(db.int_digits.size()) - 1;
  for (size_t i = 0; i < db.int_digits.size(); ++i) {
    if (db.int_digits[i] == '1') cb.push_back(tb - static_cast<long>(i));
  }
  PhiInt out;
  for (long ci : ca) {
    for (long dj : cb) {
      out = out + phi_pow(ci + dj);
    }
  }
  return out;
}

Int totient(const Int& v) {
  if (v < 1) throw DomainError("totient of nonpositive value");
  Int n = v, result = v;
  for (Int p(2); p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

OccurrenceReport primary_occurrences(const Int& v, const Int& bound) {
  if (v < 1) throw DomainError("primary_occurrences: value must be positive");
  if (bound < 0) throw NegativeInput("primary_occurrences: negative bound");
  if (!bound.fits_slong_p() || bound.get_si() > kHyperbinaryTableCap) {
    throw Error("primary_occurrences: bound too large for the dense table");
  }
  long b = bound.get_si();
  hyperbinary_warm(b);
  OccurrenceReport rep;
  rep.value = v;
  rep.bound = bound;
  rep.totient_of_value = totient(v);
  for (long m = 0; m <= b; m += 2) {
    if (hyperbinary(Int(m)) == v) rep.indices.push_back(Int(m));
  }
  // A hit in the final half of the window means the scan may be truncated.
  if (!rep.indices.empty() && v > 1) {
    if (2 * rep.indices.back() > bound) {
      throw InconclusiveBound("primary_occurrences: occurrence in the final half of the window");
    }
  }
  return rep;
}

}  // namespace phinary
