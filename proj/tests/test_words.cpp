#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "phinary/words.hpp"

using namespace phinary;

TEST_CASE("finite fibonacci words") {
  CHECK(fib_word(1) == "A");
  CHECK(fib_word(2) == "AB");
  CHECK(fib_word(3) == "ABA");
  CHECK(fib_word(4) == "ABAAB");
  CHECK(fib_word(5) == "ABAABABA");
  for (int n = 1; n <= 20; ++n) {
    CHECK(Int(static_cast<long>(fib_word(n).size())) == fib(n + 1));
  }
  for (int n = 3; n <= 16; ++n) {
    CHECK(fib_word(n) == fib_word(n - 1) + fib_word(n - 2));
  }
  CHECK_THROWS_AS(fib_word(0), DomainError);
  CHECK_THROWS_AS(fib_word(41), DepthLimit);
}

TEST_CASE("substitution morphism") {
  CHECK(substitute("A") == "AB");
  CHECK(substitute("B") == "A");
  for (int n = 1; n <= 14; ++n) {
    CHECK(substitute(fib_word(n)) == fib_word(n + 1));
  }
}

TEST_CASE("letter counts") {
  for (int n = 2; n <= 18; ++n) {
    auto [as, bs] = letter_counts(n);
    CHECK(as == fib(n));
    CHECK(bs == fib(n - 1));
  }
}

TEST_CASE("infinite word prefixes") {
  CHECK(infinite_prefix(13) == "ABAABABAABAAB");
  for (int n = 2; n <= 16; ++n) {
    CHECK(infinite_prefix(fib(n + 1).get_si()) == fib_word(n));
  }
  // Per-letter rule matches the prefix function.
  Word w = infinite_prefix(500);
  for (long i = 1; i <= 500; ++i) {
    CHECK(infinite_letter(i) == w[static_cast<size_t>(i - 1)]);
  }
  CHECK(w.find("BB") == std::string::npos);
  CHECK(w.find("AAA") == std::string::npos);
}

TEST_CASE("cutting sequence equals the infinite word") {
  CHECK(cutting_sequence(1000) == infinite_prefix(1000));
}

TEST_CASE("palindromic truncations") {
  CHECK(truncate_palindrome(3) == "A");
  CHECK(truncate_palindrome(4) == "ABA");
  CHECK(truncate_palindrome(5) == "ABAABA");
  for (int n = 3; n <= 16; ++n) {
    Word t = truncate_palindrome(n);
    Word w = fib_word(n);
    CHECK(t.size() + 2 == w.size());
    CHECK(std::equal(t.begin(), t.end(), w.begin()));
    CHECK(std::equal(t.begin(), t.end(), t.rbegin()));
  }
  CHECK_THROWS_AS(truncate_palindrome(2), DomainError);
}

TEST_CASE("letters sit on the beatty grid") {
  // A letters occupy positions floor(k phi), B letters floor(k phi^2).
  for (long k = 1; k <= 200; ++k) {
    CHECK(infinite_letter(floor_times_phi(k)) == 'A');
    CHECK(infinite_letter(floor_quadrat(phi_pow_q(2) * QuadRat(k))) == 'B');
  }
}

TEST_CASE("complementary beatty pair") {
  CHECK(beatty_alpha() == QuadRat(Rat(5, 2), Rat(-1, 2)));
  CHECK(beatty_beta() == QuadRat(Rat(5, 2), Rat(1, 2)));
  CHECK(inverse(beatty_alpha()) + inverse(beatty_beta()) == QuadRat(1));
  auto a = beatty(beatty_alpha(), 400);
  auto b = beatty(beatty_beta(), 150);
  std::set<Int> seen;
  for (const Int& v : a)
    if (v <= 500) CHECK(seen.insert(v).second);
  for (const Int& v : b)
    if (v <= 500) CHECK(seen.insert(v).second);
  // Together they tile 1..500 with no gaps.
  long expect = 1;
  for (const Int& v : seen) {
    CHECK(v == expect);
    ++expect;
  }
  CHECK(expect == 501);
  CHECK_THROWS_AS(beatty(QuadRat(0), 5), DomainError);
}

TEST_CASE("beatty prefix values") {
  auto a = beatty(beatty_alpha(), 8);
  auto b = beatty(beatty_beta(), 5);
  const long ea[8] = {1, 2, 4, 5, 6, 8, 9, 11};
  const long eb[5] = {3, 7, 10, 14, 18};
  for (int i = 0; i < 8; ++i) CHECK(a[static_cast<size_t>(i)] == ea[i]);
  for (int i = 0; i < 5; ++i) CHECK(b[static_cast<size_t>(i)] == eb[i]);
}
