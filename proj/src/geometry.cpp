#include "phinary/geometry.hpp"

#include <cassert>
#include <sstream>

#include "phinary/ordinal.hpp"

namespace phinary {

const char* to_string(DiamondKind k) {
  switch (k) {
    case DiamondKind::GD:
      return "gd";
    case DiamondKind::GT:
      return "gt";
    case DiamondKind::ND:
      return "nd";
  }
  return "?";
}

std::pair<QuadRat, QuadRat> Facet::apex() const {
  QuadRat half = side * QuadRat(Rat(1, 2), Rat(0));
  QuadRat x = base_left.first + half;
  QuadRat z = points_up() ? base_left.second + side : base_left.second - side;
  return {x, z};
}

long default_row_limit(DiamondKind) { return 20; }

namespace {

void check_diamond_row(long n, long limit, DiamondKind k) {
  if (n < 1) throw DomainError("diamond rows are 1-based");
  if (n > limit) {
    throw DepthLimit(std::string(to_string(k)) + " row " + std::to_string(n) +
                     " beyond depth limit " + std::to_string(limit));
  }
}

// Lays out one girdle: walk the interval word from the left edge, letter A
// spanning `side` and hosting an up/down facet pair, letter B spanning
// `gap`.
DiamondRow build_row(DiamondKind kind, long n, const QuadRat& side,
                     const QuadRat& zeta, Word word, const QuadRat& gap) {
  DiamondRow row{kind, n, side, zeta, {}, std::move(word), {}};
  QuadRat x = -(zeta * QuadRat(Rat(1, 2), Rat(0)));
  row.points.push_back(x);
  long index = 0;
  for (char c : row.intervals) {
    if (c == 'A') {
      row.facets.push_back(Facet{kind, n, index++, side, {x, zeta}});
      row.facets.push_back(Facet{kind, n, index++, side, {x, zeta}});
      x = x + side;
    } else {
      x = x + gap;
    }
    row.points.push_back(x);
  }
  return row;
}

QuadRat golden_zeta(long n) {
  // zeta_n = phi (1 - psi^n) = sum_{i=1}^{n} psi^i.
  return phi_q() * (QuadRat(1) - phi_pow_q(-n));
}

}  // namespace

DiamondRow gd_row(long n, long limit) {
  check_diamond_row(n, limit, DiamondKind::GD);
  Int letters = fib(n + 3) - 2;
  assert(letters.fits_slong_p());
  return build_row(DiamondKind::GD, n, phi_pow_q(-n), golden_zeta(n),
                   infinite_prefix(letters.get_si()), phi_pow_q(-n - 1));
}

DiamondRow gt_row(long n, long limit) {
  check_diamond_row(n, limit, DiamondKind::GT);
  return build_row(DiamondKind::GT, n, phi_pow_q(-n), golden_zeta(n),
                   fib_word(static_cast<int>(n)), phi_pow_q(-n - 1));
}

DiamondRow nd_row(long n, long limit) {
  check_diamond_row(n, limit, DiamondKind::ND);
  QuadRat side(Rat(1), Rat(0));
  for (long i = 0; i < n; ++i) side.p /= 2;
  QuadRat zeta = QuadRat(1) - side;
  long count = (1L << n) - 1;
  Word word;
  word.reserve(static_cast<size_t>(count));
  for (long i = 0; i < count; ++i) word += (i % 2 == 0) ? 'A' : 'B';
  return build_row(DiamondKind::ND, n, side, zeta, std::move(word), side);
}

DiamondRow diamond_row(DiamondKind k, long n, long limit) {
  switch (k) {
    case DiamondKind::GD:
      return gd_row(n, limit);
    case DiamondKind::GT:
      return gt_row(n, limit);
    case DiamondKind::ND:
      return nd_row(n, limit);
  }
  throw DomainError("diamond_row: unknown kind");
}

Word row_word(DiamondKind k, long n, long limit) {
  if (n < 1) throw DomainError("row_word: rows are 1-based");
  if (n + 1 > limit) throw DepthLimit("row_word beyond depth limit");
  switch (k) {
    case DiamondKind::GD:
      // Palindromic prefix: fib_word(n+3) minus its final two letters.
      return truncate_palindrome(static_cast<int>(n) + 3);
    case DiamondKind::GT:
      return fib_word(static_cast<int>(n) + 1);
    case DiamondKind::ND:
      throw DomainError("row_word: defined for gd and gt only");
  }
  throw DomainError("row_word: unknown kind");
}

std::pair<QuadRat, QuadRat> verify_area_identity(long N) {
  if (N < 1) throw DomainError("verify_area_identity: N >= 1");
  QuadRat partial(0);
  for (long n = 1; n <= N; ++n) {
    QuadRat pairs(Rat(fib(n + 2) - 1), Rat(0));
    partial = partial + pairs * phi_pow_q(-2 * n - 2);
  }
  QuadRat residual = QuadRat(Rat(1, 2), Rat(0)) - partial;
  return {partial, residual};
}

bool verify_row_length_identity(long n) {
  if (n < 1) throw DomainError("verify_row_length_identity: n >= 1");
  QuadRat lhs = QuadRat(Rat(fib(n + 2) - 1), Rat(0)) * phi_pow_q(-n) +
                QuadRat(Rat(fib(n + 1) - 1), Rat(0)) * phi_pow_q(-n - 1);
  QuadRat rhs(0);
  for (long i = 1; i <= n; ++i) rhs = rhs + phi_pow_q(-i);
  return lhs == rhs;
}

LimitReport verify_limits(long N, const Rat& tolerance) {
  if (N < 2) throw DomainError("verify_limits: N >= 2");
  LimitReport rep;
  rep.N = N;
  QuadRat tol(tolerance, Rat(0));
  auto add = [&](const char* name, const QuadRat& term, const QuadRat& limit) {
    QuadRat d = term - limit;
    if (sign(d) < 0) d = -d;
    rep.entries.push_back(LimitReport::Entry{
        name, d, to_decimal(d, 12), d < tol});
  };
  add("fib_ratio", QuadRat(Rat(fib(N)), Rat(0)) * phi_pow_q(-(N - 1)),
      QuadRat(Rat(1, 2), Rat(1, 10)));
  add("fib_ratio_shifted", QuadRat(Rat(fib(N - 1)), Rat(0)) * phi_pow_q(-N),
      QuadRat(Rat(1, 2), Rat(-1, 10)));
  add("half_row_sum", QuadRat(Rat(fib(N + 2) - 1), Rat(0)) * phi_pow_q(-N),
      QuadRat(Rat(1, 2), Rat(3, 10)));
  add("gap_sum", QuadRat(Rat(fib(N + 1) - 1), Rat(0)) * phi_pow_q(-(N + 1)),
      QuadRat(Rat(0), Rat(1, 5)));
  rep.all_within = true;
  for (const auto& e : rep.entries) rep.all_within = rep.all_within && e.within;
  return rep;
}

QuadRat cross_ratio(const QuadRat& a, const QuadRat& b, const QuadRat& c,
                    const QuadRat& d) {
  QuadRat cb = c - b;
  QuadRat da = d - a;
  if (sign(cb) == 0 || sign(da) == 0) {
    throw DegenerateConfiguration("cross_ratio: coincident points");
  }
  return ((c - a) * (d - b)) / (cb * da);
}

QuadRat gd_interval_ratio() {
  // Points along the projected girdle: A = 0, B = psi, C = psi + psi^2/2,
  // D = psi + psi^2.
  QuadRat psi = psi_q();
  QuadRat psi2 = psi * psi;
  QuadRat half(Rat(1, 2), Rat(0));
  QuadRat a(0), b = psi, c = psi + psi2 * half, d = psi + psi2;
  QuadRat cr = cross_ratio(a, b, c, d);
  // The true-interval ratio x solves (x+1)^2 = cr (2x+1), i.e.
  // x = (cr-1) + sqrt((cr-1) cr).  Here (cr-1) cr = psi phi = 1 exactly,
  // so the root is rational and x = cr.
  QuadRat disc = (cr - QuadRat(1)) * cr;
  assert(disc == QuadRat(1));
  (void)disc;
  QuadRat sqrt_disc(1);
  return cr - QuadRat(1) + sqrt_disc;
}

ProjectionSetup gd_setup() {
  return ProjectionSetup{-(phi_q() * QuadRat(Rat(1, 2), Rat(0))), phi_q()};
}

ProjectionSetup nd_setup() {
  return ProjectionSetup{QuadRat(Rat(-1, 2), Rat(0)), QuadRat(1)};
}

ImagePoint project(const ProjectionSetup& setup, const QuadRat& u, const QuadRat& v) {
  QuadRat two_f = setup.focal_xy + setup.focal_xy;
  QuadRat denom = two_f - u - v;
  if (sign(denom) == 0) {
    throw PointAtInfinity("project: point on the focal plane");
  }
  QuadRat t = two_f / denom;
  QuadRat x = setup.focal_xy + t * (u - setup.focal_xy);
  QuadRat zeta = setup.focal_height * (QuadRat(1) - t);
  return ImagePoint{x, zeta};
}

QuadRat project_line(const QuadRat& r, const QuadRat& x) {
  QuadRat rm1 = r - QuadRat(1);
  if (sign(rm1) == 0) throw DegenerateConfiguration("project_line: r = 1");
  QuadRat d = inverse(rm1);
  QuadRat h = r * d;
  QuadRat denom = d + x;
  if (sign(denom) == 0) throw PointAtInfinity("project_line: x = -d");
  return h * x / denom;
}

CuttingPoints cutting_points(DiamondKind k, long n, long limit) {
  check_diamond_row(n, limit, k);
  if (k == DiamondKind::GD) {
    Int count = fib(n + 3) - 2;
    // The count is itself a rank: phi^{n+1} hook phi.
    PhiInt witness = unrank(count);
    assert(witness == phi_pow(n + 1) - phi_pow(1));
    return CuttingPoints{count, witness};
  }
  if (k == DiamondKind::ND) {
    Int count = (Int(1) << static_cast<unsigned long>(n)) - 1;
    return CuttingPoints{count, PhiInt()};
  }
  throw DomainError("cutting_points: defined for gd and nd only");
}

std::pair<std::vector<long>, std::vector<long>> solve_cardinality_equations() {
  std::vector<long> pow2, fibeq;
  for (long x = 0; x <= 64; ++x) {
    Int p = (Int(1) << static_cast<unsigned long>(x)) - 1;
    if (p == x) pow2.push_back(x);
    if (fib(x + 3) - 2 == x) fibeq.push_back(x);
  }
  return {pow2, fibeq};
}

// ---------------------------------------------------------------------------
// SVG rendering.

namespace {

// 10^25-scaled integer square roots, shared by every coordinate conversion.
struct RootScale {
  Int M;
  Int s3, s5, s15;
  RootScale() {
    mpz_ui_pow_ui(M.get_mpz_t(), 10, 25);
    s3 = isqrt(3 * M * M);
    s5 = isqrt(5 * M * M);
    s15 = isqrt(15 * M * M);
  }
};

const RootScale& roots() {
  static const RootScale r;
  return r;
}

std::string format_fixed(const Int& scaled, int digits) {
  bool neg = scaled < 0;
  Int a = abs(scaled);
  std::string u = a.get_str();
  if (digits == 0) return (neg ? "-" : "") + u;
  if (u.size() <= static_cast<size_t>(digits)) {
    u = std::string(static_cast<size_t>(digits) + 1 - u.size(), '0') + u;
  }
  size_t cut = u.size() - static_cast<size_t>(digits);
  return (neg ? "-" : "") + u.substr(0, cut) + "." + u.substr(cut);
}

// Decimal rendering of plain + eq * (sqrt3 / 2) at `digits` places.  The
// irrationals are replaced by 25-digit scaled integer roots, so the value
// is exact to ~1e-25 and the printed bytes are identical on every run.
std::string svg_num(const QuadRat& plain, const QuadRat& eq, int digits) {
  const RootScale& rs = roots();
  Rat A = plain.p;
  Rat B = plain.q;
  Rat C = eq.p / 2;
  Rat D = eq.q / 2;
  Int P;
  mpz_ui_pow_ui(P.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rat t = A * Rat(P) +
          (B * Rat(rs.s5) + C * Rat(rs.s3) + D * Rat(rs.s15)) * Rat(P) / Rat(rs.M);
  t += Rat(1, 2);
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
  return format_fixed(out, digits);
}

struct SvgWriter {
  std::ostringstream out;
  int digits;
  explicit SvgWriter(int d) : digits(d) {}
  // Display x: frame x.  Display y: (top - zeta) * sqrt3/2, so zeta
  // increases upward on screen.
  QuadRat top;
  std::string x(const QuadRat& v) { return svg_num(v, QuadRat(0), digits); }
  std::string y(const QuadRat& zeta) {
    return svg_num(QuadRat(0), top - zeta, digits);
  }
  void polygon(const std::vector<std::pair<QuadRat, QuadRat>>& pts,
               const std::string& attrs) {
    out << "<polygon points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      if (i) out << " ";
      out << x(pts[i].first) << "," << y(pts[i].second);
    }
    out << "\" " << attrs << "/>\n";
  }
  void line(const QuadRat& x1, const QuadRat& z1, const QuadRat& x2,
            const QuadRat& z2, const std::string& attrs) {
    out << "<line x1=\"" << x(x1) << "\" y1=\"" << y(z1) << "\" x2=\"" << x(x2)
        << "\" y2=\"" << y(z2) << "\" " << attrs << "/>\n";
  }
};

const char* kRowFill[6] = {"#4e79a7", "#f28e2b", "#59a14f",
                           "#e15759", "#b07aa1", "#76b7b2"};

void emit_facets(SvgWriter& w, const DiamondRow& row) {
  for (const Facet& f : row.facets) {
    std::vector<std::pair<QuadRat, QuadRat>> pts{
        {f.base_left.first, f.base_left.second},
        {f.base_left.first + f.side, f.base_left.second},
        f.apex()};
    std::string fill = kRowFill[static_cast<size_t>(f.row - 1) % 6];
    std::string attrs = "fill=\"" + fill + "\"";
    if (!f.points_up()) attrs += " fill-opacity=\"0.45\"";
    w.polygon(pts, attrs);
  }
}

std::string render_diamond(DiamondKind kind, long depth, const RenderOptions& opt,
                           bool perspective) {
  SvgWriter w(opt.decimals);
  QuadRat phi = phi_q();
  QuadRat half(Rat(1, 2), Rat(0));
  w.top = (kind == DiamondKind::ND) ? QuadRat(1) : phi;
  QuadRat left = (kind == DiamondKind::ND) ? QuadRat(Rat(-1, 2), Rat(0))
                                           : -(phi * half);
  // GT keeps the left edge but its right boundary is x = psi - zeta/2,
  // widest at zeta = 0.
  QuadRat right = (kind == DiamondKind::GT) ? psi_q() : -left;
  QuadRat pad(Rat(1, 10), Rat(0));
  QuadRat minx = left - pad;
  QuadRat width = right - left + pad + pad;
  std::ostringstream head;
  head << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
       << w.x(minx) << " " << svg_num(-pad, QuadRat(0), opt.decimals) << " "
       << w.x(width) << " "
       << svg_num(pad + pad, w.top, opt.decimals) << "\">\n";
  w.out << "<desc>" << to_string(kind) << " rows 1.." << depth
        << (perspective ? " with perspective lines" : "") << "</desc>\n";
  // Outer boundary.
  if (kind == DiamondKind::GT) {
    QuadRat psi = psi_q();
    w.polygon({{QuadRat(0), QuadRat(0)},
               {psi * half, psi},
               {psi - phi * half, phi},
               {-(phi * half), phi}},
              "fill=\"none\" stroke=\"#222222\" stroke-width=\"0.004\"");
  } else {
    w.polygon({{QuadRat(0), QuadRat(0)}, {-left, w.top}, {left, w.top}},
              "fill=\"none\" stroke=\"#222222\" stroke-width=\"0.004\"");
  }
  long limit = default_row_limit(kind);
  for (long n = 1; n <= depth; ++n) {
    emit_facets(w, diamond_row(kind, n, limit));
  }
  if (perspective) {
    // Rays from each top corner through the opposite edge's grid images:
    // the images of the domain boundary points (u, 0, 0) and (0, v, 0).
    ProjectionSetup setup = nd_setup();
    long rays = (1L << depth) - 1;
    std::string attrs =
        "stroke=\"#888888\" stroke-width=\"0.0015\" stroke-opacity=\"0.8\"";
    for (long u = 1; u <= rays; ++u) {
      ImagePoint img = project(setup, QuadRat(u), QuadRat(0));
      w.line(QuadRat(Rat(-1, 2), Rat(0)), QuadRat(1), img.x, img.zeta, attrs);
      ImagePoint mir = project(setup, QuadRat(0), QuadRat(u));
      w.line(QuadRat(Rat(1, 2), Rat(0)), QuadRat(1), mir.x, mir.zeta, attrs);
    }
  }
  return head.str() + w.out.str() + "</svg>\n";
}

}  // namespace

std::string render_svg(const std::string& scene, long depth,
                       const RenderOptions& options) {
  if (depth < 1) throw DomainError("render_svg: depth must be >= 1");
  if (scene == "gd" || scene == "gt" || scene == "nd") {
    DiamondKind k = scene == "gd"   ? DiamondKind::GD
                    : scene == "gt" ? DiamondKind::GT
                                    : DiamondKind::ND;
    if (depth > default_row_limit(k)) throw DepthLimit("render_svg: depth beyond row limit");
    return render_diamond(k, depth, options, false);
  }
  if (scene == "projection") {
    if (depth > 8) throw DepthLimit("render_svg: projection depth beyond 8");
    return render_diamond(DiamondKind::ND, depth, options,
                          options.perspective_lines);
  }
  throw DomainError("render_svg: unknown scene '" + scene + "'");
}

}  // namespace phinary
