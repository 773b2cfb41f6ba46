#include "phinary/words.hpp"

#include <cassert>

namespace phinary {

Word fib_word(int n) {
  if (n < 1) throw DomainError("fib_word: index must be >= 1");
  if (n > 40) throw DepthLimit("fib_word: index beyond 40");
  Word prev = "A";   // w_1
  if (n == 1) return prev;
  Word cur = "AB";   // w_2
  for (int i = 3; i <= n; ++i) {
    Word next = cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Word substitute(const Word& w) {
  Word out;
  out.reserve(w.size() * 2);
  for (char c : w) {
    if (c == 'A') {
      out += "AB";
    } else if (c == 'B') {
      out += 'A';
    } else {
      throw DomainError("substitute: alphabet is {A, B}");
    }
  }
  return out;
}

char infinite_letter(const Int& n) {
  if (n < 1) throw DomainError("infinite_letter: positions are 1-based");
  Int delta = floor_times_phi(n + 1) - floor_times_phi(n) - 1;
  assert(delta == 0 || delta == 1);
  return delta == 1 ? 'A' : 'B';
}

Word infinite_prefix(long len) {
  if (len < 0) throw DomainError("infinite_prefix: negative length");
  Word out;
  out.reserve(static_cast<size_t>(len));
  // Incremental floors: one isqrt per letter is affordable at the lengths
  // used here (tests and geometry rows).
  Int prev = floor_times_phi(Int(1));
  for (long n = 1; n <= len; ++n) {
    Int next = floor_times_phi(Int(n + 1));
    out += (next - prev - 1 == 1) ? 'A' : 'B';
    prev = next;
  }
  return out;
}

Word cutting_sequence(long letters) {
  if (letters < 0) throw DomainError("cutting_sequence: negative length");
  Word out;
  out.reserve(static_cast<size_t>(letters));
  // Vertical crossings happen at x = k (integers), horizontal crossings at
  // x = m*phi.  Compare k vs m*phi exactly: sign(m*phi - k) in Z[phi].
  Int k = 1, m = 1;
  for (long i = 0; i < letters; ++i) {
    int c = sign(PhiInt(m, -k));
    // m*phi == k never happens for positive integers (phi irrational).
    assert(c != 0);
    if (c > 0) {
      out += 'A';
      ++k;
    } else {
      out += 'B';
      ++m;
    }
  }
  return out;
}

Word truncate_palindrome(int n) {
  if (n < 3) throw DomainError("truncate_palindrome: requires n >= 3");
  Word w = fib_word(n);
  w.resize(w.size() - 2);
  return w;
}

std::pair<Int, Int> letter_counts(int n) {
  Word w = fib_word(n);
  long a = 0, b = 0;
  for (char c : w) (c == 'A' ? a : b)++;
  return {Int(a), Int(b)};
}

std::vector<Int> beatty(const QuadRat& alpha, long count) {
  if (sign(alpha) <= 0) throw DomainError("beatty: alpha must be positive");
  if (count < 0) throw DomainError("beatty: negative count");
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(count));
  QuadRat acc(0);
  for (long n = 1; n <= count; ++n) {
    acc = acc + alpha;
    out.push_back(floor_quadrat(acc));
  }
  return out;
}

QuadRat beatty_alpha() { return QuadRat(Rat(5, 2), Rat(-1, 2)); }

QuadRat beatty_beta() { return QuadRat(Rat(5, 2), Rat(1, 2)); }

}  // namespace phinary
