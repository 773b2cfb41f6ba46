#include "phinary/codec.hpp"

#include <algorithm>
#include <cassert>

namespace phinary {

namespace {

constexpr long kFracCap = 64;      // lowest admissible position is -kFracCap
constexpr long kRewriteFuel = 10'000'000;

// phi^k as an element of Z[phi], valid for negative k too.
PhiInt phi_pow_any(long k) { return PhiInt(fib(k), fib(k - 1)); }

PhiDigits digits_from_positions(const std::map<long, Int>& pos) {
  PhiDigits out;
  if (pos.empty()) return out;
  long hi = pos.rbegin()->first;
  long lo = pos.begin()->first;
  if (hi < 0) hi = 0;
  std::string ints;
  for (long k = hi; k >= 0; --k) {
    auto it = pos.find(k);
    ints += (it != pos.end() && it->second == 1) ? '1' : '0';
  }
  // Strip leading zeros down to a single digit.
  size_t nz = ints.find('1');
  out.int_digits = (nz == std::string::npos) ? "0" : ints.substr(nz);
  if (lo < 0) {
    std::string fracs;
    for (long k = -1; k >= lo; --k) {
      auto it = pos.find(k);
      fracs += (it != pos.end() && it->second == 1) ? '1' : '0';
    }
    while (!fracs.empty() && fracs.back() == '0') fracs.pop_back();
    out.frac_digits = fracs;
  }
  return out;
}

}  // namespace

std::string to_string(const PhiDigits& d) {
  if (d.frac_digits.empty()) return d.int_digits;
  return d.int_digits + "." + d.frac_digits;
}

PhiDigits parse_digits(const std::string& text) {
  std::string ints, fracs;
  bool seen_dot = false;
  for (char c : text) {
    if (c == '.') {
      if (seen_dot) throw MalformedDigits("multiple radix points in '" + text + "'");
      seen_dot = true;
    } else if (c == '0' || c == '1') {
      (seen_dot ? fracs : ints) += c;
    } else {
      throw MalformedDigits("invalid digit character in '" + text + "'");
    }
  }
  if (ints.empty() && fracs.empty()) throw MalformedDigits("empty digit string");
  // Canonicalize zeros but keep the digits as given otherwise.
  size_t nz = ints.find('1');
  PhiDigits out;
  out.int_digits = (nz == std::string::npos) ? "0" : ints.substr(nz);
  while (!fracs.empty() && fracs.back() == '0') fracs.pop_back();
  out.frac_digits = fracs;
  return out;
}

QuadRat value_of(const PhiDigits& d) { return embed(decode(d)); }

QuadRat value_of(const RawDigits& raw) {
  PhiInt acc;
  for (const auto& [k, count] : raw.digits) {
    if (count < 0) throw MalformedDigits("negative digit count");
    if (count == 0) continue;
    PhiInt p = phi_pow_any(k);
    acc = acc + PhiInt(p.a * count, p.b * count);
  }
  return embed(acc);
}

PhiDigits normalize(const RawDigits& raw) {
  std::map<long, Int> d;
  for (const auto& [k, count] : raw.digits) {
    if (count < 0) throw MalformedDigits("negative digit count");
    if (count > 0) d[k] = count;
  }
  auto bump = [&d](long k, const Int& by) {
    if (k < -kFracCap) throw DomainError("expansion exceeds 64 fractional positions");
    auto it = d.find(k);
    if (it == d.end()) {
      d.emplace(k, by);
    } else {
      it->second += by;
      if (it->second == 0) d.erase(it);
    }
  };
  long fuel = kRewriteFuel;
  for (;;) {
    if (--fuel < 0) throw Error("normalize: rewrite fuel exhausted");
    // Prefer merging pairs upward (keeps the expansion shallow), highest
    // position first; split a doubled digit only when no carry applies.
    bool acted = false;
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
      long k = it->first;
      auto below = d.find(k - 1);
      if (below == d.end()) continue;
      Int m = std::min(it->second, below->second);
      assert(m > 0);
      bump(k, -m);
      bump(k - 1, -m);
      bump(k + 1, m);
      acted = true;
      break;
    }
    if (acted) continue;
    for (auto it = d.rbegin(); it != d.rend(); ++it) {
      if (it->second < 2) continue;
      long k = it->first;
      Int half = it->second / 2;
      Int rem = it->second % 2;
      d.erase(std::next(it).base());
      if (rem > 0) bump(k, rem);
      bump(k + 1, half);
      bump(k - 2, half);
      acted = true;
      break;
    }
    if (!acted) break;
  }
  // Fixpoint: all digits are 1 with no adjacent positions.
  for (const auto& [k, count] : d) {
    assert(count == 1);
    assert(d.find(k - 1) == d.end());
    (void)k;
    (void)count;
  }
  return digits_from_positions(d);
}

PhiDigits encode_standard(const PhiInt& x) {
  int s = sign(x);
  if (s < 0) throw NegativeInput("encode_standard of negative value");
  if (s == 0) return PhiDigits{};
  // Greedy descent: subtract the largest phi^k <= remainder.  The remainder
  // after position k is strictly below phi^{k-1}, so picks are never adjacent
  // and the loop terminates for every value of Z[phi] (finite expansions).
  std::map<long, Int> pos;
  long k = 0;
  while (phi_pow_any(k + 1) <= x) ++k;
  while (phi_pow_any(k) > x) --k;
  PhiInt rem = x;
  long prev = k + 2;
  while (true) {
    assert(k <= prev - 2);
    pos[k] = 1;
    rem = rem - phi_pow_any(k);
    if (sign(rem) == 0) break;
    prev = k;
    k -= 2;
    while (phi_pow_any(k) > rem) {
      if (--k < -kFracCap) throw DomainError("expansion exceeds 64 fractional positions");
    }
  }
  return digits_from_positions(pos);
}

PhiDigits encode_natural(const Int& n) {
  if (n < 0) throw NegativeInput("encode_natural of negative value");
  return encode_standard(PhiInt(Int(0), n));
}

PhiInt decode(const PhiDigits& d) {
  PhiInt acc;
  long top = static_cast<long>(d.int_digits.size()) - 1;
  for (size_t i = 0; i < d.int_digits.size(); ++i) {
    if (d.int_digits[i] == '1') acc = acc + phi_pow_any(top - static_cast<long>(i));
  }
  for (size_t i = 0; i < d.frac_digits.size(); ++i) {
    if (d.frac_digits[i] == '1') acc = acc + phi_pow_any(-1 - static_cast<long>(i));
  }
  return acc;
}

bool is_phinary(const PhiInt& x) {
  int s = sign(x);
  if (s < 0) return false;
  if (s == 0) return true;
  long k = 0;
  while (phi_pow_any(k + 1) <= x) ++k;
  if (k == 0 && phi_pow_any(0) > x) return false;  // 0 < x < 1
  PhiInt rem = x;
  while (k >= 0) {
    if (phi_pow_any(k) <= rem) {
      rem = rem - phi_pow_any(k);
      if (sign(rem) == 0) return true;
      k -= 2;
    } else {
      --k;
    }
  }
  return false;
}

}  // namespace phinary
