#include "phinary/core.hpp"

#include <cassert>
#include <cctype>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace phinary {

PhiInt mul(const PhiInt& x, const PhiInt& y) {
  Int ac = x.a * y.a;
  return PhiInt(ac + x.a * y.b + x.b * y.a, ac + x.b * y.b);
}

int sign(const PhiInt& x) {
  // 2*(a*phi + b) = s + a*sqrt5 with s = 2b + a.
  Int s = 2 * x.b + x.a;
  int ss = sgn(s);
  int sa = sgn(x.a);
  if (sa == 0) return ss;
  if (ss == 0) return sa;
  if (ss == sa) return ss;
  // Opposite signs: compare |s| vs sqrt5*|a| via squares.
  Int lhs = s * s;
  Int rhs = 5 * x.a * x.a;
  int c = cmp(lhs, rhs);
  // lhs == rhs would force sqrt5 rational.
  assert(c != 0);
  return c > 0 ? ss : sa;
}

namespace {

// Shared Fibonacci table, F_0..F_max, grown on demand.  Readers copy the
// entry out under a shared lock so growth never invalidates a value in use.
std::shared_mutex g_fib_mutex;
std::vector<Int> g_fib{Int(0), Int(1)};

}  // namespace

Int fib(long n) {
  if (n < 0) {
    Int v = fib(-n);
    return ((-n) % 2 == 0) ? Int(-v) : v;
  }
  {
    std::shared_lock<std::shared_mutex> lock(g_fib_mutex);
    if (static_cast<long>(g_fib.size()) > n) return g_fib[static_cast<size_t>(n)];
  }
  std::unique_lock<std::shared_mutex> lock(g_fib_mutex);
  while (static_cast<long>(g_fib.size()) <= n) {
    size_t k = g_fib.size();
    g_fib.push_back(g_fib[k - 1] + g_fib[k - 2]);
  }
  return g_fib[static_cast<size_t>(n)];
}

PhiInt phi_pow(long n) {
  if (n < 0) throw DomainError("phi_pow: negative exponent needs QuadRat");
  return PhiInt(fib(n), fib(n - 1));
}

std::string to_string(const PhiInt& x) {
  if (x.a == 0) return x.b.get_str();
  std::string out;
  if (x.a == 1) {
    out = "\xCF\x86";  // UTF-8 phi
  } else if (x.a == -1) {
    out = "-\xCF\x86";
  } else {
    out = x.a.get_str() + "\xCF\x86";
  }
  if (x.b != 0) {
    if (x.b > 0) out += "+";
    out += x.b.get_str();
  }
  return out;
}

namespace {

bool consume_phi(const std::string& s, size_t& i) {
  if (i + 1 < s.size() && static_cast<unsigned char>(s[i]) == 0xCF &&
      static_cast<unsigned char>(s[i + 1]) == 0x86) {
    i += 2;
    return true;
  }
  if (i + 2 < s.size() && (s[i] == 'p' || s[i] == 'P') &&
      (s[i + 1] == 'h' || s[i + 1] == 'H') && (s[i + 2] == 'i' || s[i + 2] == 'I')) {
    i += 3;
    return true;
  }
  return false;
}

}  // namespace

PhiInt parse_phiint(const std::string& text) {
  // Strip whitespace and '*' so "2 * phi + 1" and "2φ+1" parse alike.
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') s += c;
  }
  if (s.empty()) throw ParseError("empty value");
  PhiInt acc;
  size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign_term = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign_term = -1;
      ++i;
    } else if (!first) {
      throw ParseError("expected + or - in '" + text + "'");
    }
    first = false;
    size_t dstart = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    std::string digits = s.substr(dstart, i - dstart);
    bool has_phi = consume_phi(s, i);
    if (digits.empty() && !has_phi) throw ParseError("bad term in '" + text + "'");
    Int coeff = digits.empty() ? Int(1) : Int(digits);
    if (sign_term < 0) coeff = -coeff;
    if (has_phi) {
      acc.a += coeff;
    } else {
      acc.b += coeff;
    }
  }
  return acc;
}

int sign(const QuadRat& x) {
  int sp = sgn(x.p);
  int sq = sgn(x.q);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  Rat lhs = x.p * x.p;
  Rat rhs = 5 * x.q * x.q;
  int c = cmp(lhs, rhs);
  assert(c != 0);
  return c > 0 ? sp : sq;
}

QuadRat inverse(const QuadRat& x) {
  // 1/(p + q*sqrt5) = (p - q*sqrt5) / (p^2 - 5q^2).
  Rat norm = x.p * x.p - 5 * x.q * x.q;
  if (norm == 0) {
    // norm = 0 with rational p, q forces p = q = 0.
    throw DivisionByZero("inverse of zero");
  }
  return QuadRat(x.p / norm, -x.q / norm);
}

QuadRat operator/(const QuadRat& x, const QuadRat& y) { return x * inverse(y); }

QuadRat embed(const PhiInt& x) {
  Rat half_a(x.a);
  half_a /= 2;
  return QuadRat(Rat(x.b) + half_a, half_a);
}

QuadRat phi_q() { return QuadRat(Rat(1, 2), Rat(1, 2)); }

QuadRat psi_q() { return QuadRat(Rat(-1, 2), Rat(1, 2)); }

QuadRat phi_pow_q(long n) {
  if (n >= 0) return embed(phi_pow(n));
  // phi^{-m} = F_{-m}*phi + F_{-m-1} stays in Z[phi].
  return embed(PhiInt(fib(n), fib(n - 1)));
}

Int isqrt(const Int& n) {
  if (n < 0) throw NegativeInput("isqrt of negative");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Int floor_quadrat(const QuadRat& x) {
  if (x.q == 0) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), x.p.get_num().get_mpz_t(), x.p.get_den().get_mpz_t());
    return f;
  }
  // Common denominator D > 0: x = (A + B*sqrt5)/D.
  Int pd = x.p.get_den(), qd = x.q.get_den();
  Int g;
  mpz_gcd(g.get_mpz_t(), pd.get_mpz_t(), qd.get_mpz_t());
  Int d = pd / g * qd;
  Int A = x.p.get_num() * (d / pd);
  Int B = x.q.get_num() * (d / qd);
  Int S = isqrt(5 * B * B);  // floor of sqrt5*|B|; strict since B != 0
  // sqrt5*B = sgn(B)*(S + f) with f in (0,1): numerator lies in
  // (A+S, A+S+1) for B>0 and (A-S-1, A-S) for B<0, so the floor is
  // floor(T/D) with T as below.
  Int T = (B > 0) ? Int(A + S) : Int(A - S - 1);
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), T.get_mpz_t(), d.get_mpz_t());
  return f;
}

Int floor_times_phi(const Int& k) {
  if (k < 0) throw NegativeInput("floor_times_phi of negative");
  // k*phi = (k + sqrt(5k^2))/2 and 5k^2 is never a perfect square for k>0,
  // so floor(k*phi) = (k + isqrt(5k^2)) div 2 for both parities of the sum.
  Int s = isqrt(5 * k * k);
  Int t = k + s;
  return t / 2;  // exact floor: t >= 0
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_string(const QuadRat& x) {
  if (x.q == 0) return to_string(x.p);
  std::string root = to_string(abs(x.q)) + "\xE2\x88\x9A"  // UTF-8 sqrt sign
                     "5";
  if (abs(x.q) == 1) root = "\xE2\x88\x9A" "5";
  if (x.p == 0) return (x.q < 0 ? "-" : "") + root;
  return to_string(x.p) + (x.q < 0 ? "-" : "+") + root;
}

std::string to_decimal(const QuadRat& x, int digits) {
  if (digits < 0) throw DomainError("to_decimal: negative digit count");
  int s = sign(x);
  if (s == 0) {
    std::string out = "0";
    if (digits > 0) out += "." + std::string(static_cast<size_t>(digits), '0');
    return out;
  }
  QuadRat ax = s > 0 ? x : -x;
  Int scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  QuadRat scaled = ax * QuadRat(Rat(scale), Rat(0));
  Int f = floor_quadrat(scaled);
  // Round: compare fractional part against 1/2, exactly.
  QuadRat frac = scaled - QuadRat(Rat(f), Rat(0));
  int c = sign(frac - QuadRat(Rat(1, 2), Rat(0)));
  if (c >= 0) f += 1;  // half away from zero
  std::string u = f.get_str();
  if (digits == 0) return (s < 0 ? "-" : "") + u;
  if (u.size() <= static_cast<size_t>(digits)) {
    u = std::string(static_cast<size_t>(digits) + 1 - u.size(), '0') + u;
  }
  size_t cut = u.size() - static_cast<size_t>(digits);
  std::string out = u.substr(0, cut) + "." + u.substr(cut);
  return (s < 0 ? "-" : "") + out;
}

}  // namespace phinary
