#pragma once
// Fibonacci words over {A, B}: finite words w_n, the infinite word, the
// substitution morphism, cutting sequences of the slope-1/phi line, and
// exact Beatty sequences.

#include <string>
#include <utility>
#include <vector>

#include "phinary/core.hpp"

namespace phinary {

using Word = std::string;  // characters 'A' and 'B'

// w_1 = A, w_2 = AB, w_{n+2} = w_{n+1} w_n; |w_n| = F_{n+1}.
// Throws DomainError for n < 1 and DepthLimit past n = 40 (|w_40| > 10^8).
Word fib_word(int n);

// The morphism A -> AB, B -> A applied once.  substitute(w_n) = w_{n+1}.
Word substitute(const Word& w);

// Letter n (1-based) of the infinite word: 'A' iff
// floor((n+1)*phi) - floor(n*phi) - 1 == 1, else 'B'.  Exact.
char infinite_letter(const Int& n);

// First len letters of the infinite word, via the per-letter rule.
Word infinite_prefix(long len);

// Cutting sequence of the line y = x/phi leaving the origin: 'A' when the
// line crosses a vertical gridline x = k, 'B' when it crosses a horizontal
// gridline y = m (at x = m*phi), ordered by exact crossing position.
// The two streams never collide away from the origin.
Word cutting_sequence(long letters);

// w_n with its final two letters removed: a palindrome of length F_{n+1}-2.
// Requires n >= 3.
Word truncate_palindrome(int n);

// (#A, #B) in w_n: (F_n, F_{n-1}).  Counted, not assumed.
std::pair<Int, Int> letter_counts(int n);

// floor(alpha), floor(2*alpha), ..., floor(count*alpha), exactly.
// Requires alpha > 0.
std::vector<Int> beatty(const QuadRat& alpha, long count);

// The complementary Beatty pair sqrt5/phi = (5-sqrt5)/2 and
// phi*sqrt5 = (5+sqrt5)/2.
QuadRat beatty_alpha();
QuadRat beatty_beta();

}  // namespace phinary
