#include "phinary/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "phinary/codec.hpp"
#include "phinary/diatomic.hpp"
#include "phinary/geometry.hpp"
#include "phinary/ordinal.hpp"
#include "phinary/sweeps.hpp"
#include "phinary/trees.hpp"
#include "phinary/verify.hpp"

namespace phinary {

namespace {

const char* error_name(const Error& e) {
  if (dynamic_cast<const NotPhinary*>(&e)) return "NotPhinary";
  if (dynamic_cast<const NegativeInput*>(&e)) return "NegativeInput";
  if (dynamic_cast<const MalformedDigits*>(&e)) return "MalformedDigits";
  if (dynamic_cast<const DivisionByZero*>(&e)) return "DivisionByZero";
  if (dynamic_cast<const InverseUndefined*>(&e)) return "InverseUndefined";
  if (dynamic_cast<const ExceptionalPair*>(&e)) return "ExceptionalPair";
  if (dynamic_cast<const DegenerateConfiguration*>(&e))
    return "DegenerateConfiguration";
  if (dynamic_cast<const PointAtInfinity*>(&e)) return "PointAtInfinity";
  if (dynamic_cast<const OracleBoundExceeded*>(&e)) return "OracleBoundExceeded";
  if (dynamic_cast<const InconclusiveBound*>(&e)) return "InconclusiveBound";
  if (dynamic_cast<const DepthLimit*>(&e)) return "DepthLimit";
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const DomainError*>(&e)) return "DomainError";
  return "Error";
}

Int parse_int(const std::string& text) {
  try {
    return Int(text);
  } catch (const std::invalid_argument&) {
    throw ParseError("not an integer: '" + text + "'");
  }
}

TreeKind parse_tree_kind(const std::string& name) {
  if (name == "cw") return TreeKind::CW;
  if (name == "sb") return TreeKind::SB;
  if (name == "prt") return TreeKind::PRT;
  if (name == "pert") return TreeKind::PERT;
  throw ParseError("unknown tree '" + name + "' (expected cw, sb, prt, pert)");
}

std::string join_row(const TreeRow& row) {
  std::string line;
  for (size_t i = 0; i < row.nodes.size(); ++i) {
    if (i) line += " ";
    line += to_string(row.nodes[i]);
  }
  return line;
}

std::optional<long> read_env_depth_limit() {
  const char* raw = std::getenv("PHINARY_DEPTH_LIMIT");
  if (raw == nullptr) return std::nullopt;
  char* end = nullptr;
  long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < 1) {
    throw ParseError(std::string("invalid PHINARY_DEPTH_LIMIT '") + raw + "'");
  }
  return value;
}

struct ConvertArgs {
  std::string value;
  bool to_basephi = false, from_basephi = false, natural = false;
  bool to_rank = false, from_rank = false;
};

struct SuccArgs {
  std::string value;
  long count = 1;
};

struct RankArgs {
  std::string value;
  bool inverse = false;
};

struct OpArgs {
  std::string op, a, b;
  bool recursive = false;
};

struct SeqArgs {
  std::string name;
  long count = 16;
  bool phinary = false, oracle = false;
};

struct TreeArgs {
  std::string kind;
  long row = -1, depth = -1;
  bool dot = false;
};

struct VerifyArgs {
  std::vector<std::string> suites;
  bool all = false, fail_fast = false, serial = false, json = false;
};

struct RenderArgs {
  std::string scene, out_path;
  long depth = 0;
  bool no_perspective = false;
};

int run_convert(const ConvertArgs& a, std::ostream& out) {
  int modes = a.to_basephi + a.from_basephi + a.natural + a.to_rank + a.from_rank;
  if (modes > 1) throw ParseError("choose at most one conversion mode");
  if (a.from_basephi) {
    out << to_string(decode(parse_digits(a.value))) << "\n";
  } else if (a.natural) {
    out << to_string(encode_natural(parse_int(a.value))) << "\n";
  } else if (a.to_rank) {
    out << rank(parse_phiint(a.value)).get_str() << "\n";
  } else if (a.from_rank) {
    out << to_string(unrank(parse_int(a.value))) << "\n";
  } else {
    out << to_string(encode_standard(parse_phiint(a.value))) << "\n";
  }
  return 0;
}

int run_succ(const SuccArgs& a, std::ostream& out) {
  PhiInt p = parse_phiint(a.value);
  for (long i = 0; i < a.count; ++i) p = successor(p);
  for (long i = 0; i > a.count; --i) p = predecessor(p);
  out << to_string(p) << "\n";
  return 0;
}

int run_rank(const RankArgs& a, std::ostream& out) {
  if (a.inverse) {
    out << to_string(unrank(parse_int(a.value))) << "\n";
  } else {
    out << rank(parse_phiint(a.value)).get_str() << "\n";
  }
  return 0;
}

int run_op(const OpArgs& a, std::ostream& out) {
  int level;
  if (a.op == "succ0") level = 0;
  else if (a.op == "dagger") level = 1;
  else if (a.op == "hook") level = -1;
  else if (a.op == "star") level = 2;
  else if (a.op == "stripe") level = -2;
  else if (a.op == "barexp") level = 3;
  else if (a.op == "barroot") level = -3;
  else
    throw ParseError("unknown operation '" + a.op +
                     "' (expected succ0, dagger, hook, star, stripe, barexp, "
                     "barroot)");
  PhiInt p = parse_phiint(a.a);
  PhiInt q = parse_phiint(a.b);
  PhiInt r = a.recursive ? hyperop_recursive(level, p, q) : hyperop(level, p, q);
  out << to_string(r) << "\n";
  return 0;
}

int run_parity(const std::string& value, std::ostream& out) {
  auto [cls, witness] = parity_decompose(parse_phiint(value));
  out << to_string(cls) << " q=" << to_string(witness) << "\n";
  return 0;
}

int run_seq(const SeqArgs& a, std::ostream& out) {
  if (a.count < 1) throw ParseError("--count must be positive");
  bool rank_indexed = a.name == "diatomic" || a.name == "hyperphinary";
  if (a.name != "hyperbinary" && !rank_indexed) {
    throw ParseError("unknown sequence '" + a.name +
                     "' (expected hyperbinary, diatomic, hyperphinary)");
  }
  if (a.phinary && !rank_indexed)
    throw ParseError("--phinary applies to diatomic and hyperphinary only");
  for (long n = 0; n < a.count; ++n) {
    Int value;
    if (a.name == "hyperbinary") {
      value = a.oracle ? Int(static_cast<long>(hyperbinary_reps(n).size()))
                       : hyperbinary(n);
    } else if (a.name == "diatomic") {
      value = a.oracle ? Int(static_cast<long>(fib_diatomic_reps(n).size()))
                       : fib_diatomic_nat(n);
    } else {
      PhiInt p = unrank(n);
      value = a.oracle ? Int(static_cast<long>(hyperphinary_reps(p).size()))
                       : fib_diatomic_phi(p);
    }
    if (a.phinary) out << to_string(encode_standard(unrank(n))) << " ";
    out << value.get_str() << "\n";
  }
  return 0;
}

int run_tree(const TreeArgs& a, std::ostream& out,
             const std::optional<long>& env_limit) {
  TreeKind kind = parse_tree_kind(a.kind);
  if ((a.row >= 0) == (a.depth >= 0))
    throw ParseError("give exactly one of --row or --depth");
  long limit = env_limit.value_or(default_depth_limit(kind));
  if (a.row >= 0) {
    out << join_row(tree_row(kind, a.row, limit)) << "\n";
    return 0;
  }
  if (a.dot) {
    out << tree_dot(kind, a.depth, limit);
    return 0;
  }
  for (long n = 0; n <= a.depth; ++n)
    out << join_row(tree_row(kind, n, limit)) << "\n";
  return 0;
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<std::string> names = a.suites;
  if (a.all) names.clear();
  SweepMode mode = a.serial ? SweepMode::Serial : SweepMode::Parallel;
  auto results = run_suites(names, mode, a.fail_fast);
  long failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;
  if (a.json) {
    nlohmann::ordered_json doc;
    doc["suites"] = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      doc["suites"].push_back(
          {{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    doc["passed"] = static_cast<long>(results.size()) - failed;
    doc["failed"] = failed;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.pass ? "PASS" : "FAIL") << " " << r.name << " (" << r.detail
          << ")\n";
    }
    out << (failed == 0 ? "ok" : "FAILURES") << " "
        << results.size() - failed << "/" << results.size() << "\n";
  }
  return failed == 0 ? 0 : 3;
}

int run_render(const RenderArgs& a, std::ostream& out, std::ostream& err,
               const std::optional<long>& env_limit) {
  if (env_limit && a.depth > *env_limit)
    throw DepthLimit("render depth beyond PHINARY_DEPTH_LIMIT");
  RenderOptions options;
  options.perspective_lines = !a.no_perspective;
  std::string svg = render_svg(a.scene, a.depth, options);
  if (a.out_path.empty()) {
    out << svg;
    return 0;
  }
  std::ofstream file(a.out_path, std::ios::binary);
  if (!file) {
    err << "Error: cannot open '" << a.out_path << "' for writing\n";
    return 1;
  }
  file << svg;
  return 0;
}

int run_cardinality(std::ostream& out) {
  auto [pow2, fibs] = solve_cardinality_equations();
  auto join = [](const std::vector<long>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + "}";
  };
  out << "x=2^x-1: " << join(pow2) << "; x=F(x+3)-2: " << join(fibs) << "\n";
  return 0;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact arithmetic, sequences, trees, and geometry of the "
               "golden-base integers"};
  app.require_subcommand(0, 1);

  ConvertArgs convert_args;
  auto* convert = app.add_subcommand("convert", "base-phi and rank conversions");
  convert->add_option("value", convert_args.value, "input value")->required();
  convert->add_flag("--to-basephi", convert_args.to_basephi,
                    "a*phi+b expression to standard-form digits (default)");
  convert->add_flag("--from-basephi", convert_args.from_basephi,
                    "standard-form digits to a*phi+b");
  convert->add_flag("--natural", convert_args.natural,
                    "natural number to standard-form digits");
  convert->add_flag("--to-rank", convert_args.to_rank,
                    "a*phi+b expression to its enumeration index");
  convert->add_flag("--from-rank", convert_args.from_rank,
                    "enumeration index to a*phi+b");

  SuccArgs succ_args;
  auto* succ = app.add_subcommand("succ", "successor in the ordinal order");
  succ->add_option("value", succ_args.value, "a*phi+b expression")->required();
  succ->add_option("-n,--count", succ_args.count,
                   "how many steps (negative for predecessor)");

  RankArgs rank_args;
  auto* rankc = app.add_subcommand("rank", "enumeration index of a value");
  rankc->add_option("value", rank_args.value, "a*phi+b expression or index")
      ->required();
  rankc->add_flag("--inverse", rank_args.inverse, "index to value instead");

  OpArgs op_args;
  auto* op = app.add_subcommand("op", "rank-transported hyperoperations");
  op->add_option("name", op_args.op,
                 "succ0, dagger, hook, star, stripe, barexp, barroot")
      ->required();
  op->add_option("a", op_args.a, "left operand")->required();
  op->add_option("b", op_args.b, "right operand")->required();
  op->add_flag("--recursive", op_args.recursive,
               "use the successor recursion instead of rank arithmetic");

  std::string parity_value;
  auto* parityc = app.add_subcommand("parity", "even / odd / curious class");
  parityc->add_option("value", parity_value, "a*phi+b expression")->required();

  SeqArgs seq_args;
  auto* seq = app.add_subcommand("seq", "diatomic-family sequences");
  seq->add_option("name", seq_args.name, "hyperbinary, diatomic, hyperphinary")
      ->required();
  seq->add_option("--count", seq_args.count, "number of terms (default 16)");
  seq->add_flag("--phinary", seq_args.phinary,
                "prefix each term with the standard-form index");
  seq->add_flag("--oracle", seq_args.oracle,
                "count representations by enumeration instead of recurrence");

  TreeArgs tree_args;
  auto* tree = app.add_subcommand("tree", "recurrence tree rows");
  tree->add_option("kind", tree_args.kind, "cw, sb, prt, pert")->required();
  tree->add_option("--row", tree_args.row, "print one row");
  tree->add_option("--depth", tree_args.depth, "print rows 0..N");
  tree->add_flag("--dot", tree_args.dot, "emit graphviz for rows 0..N");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run named verification suites");
  verify->add_option("suites", verify_args.suites, "suite names (default all)");
  verify->add_flag("--all", verify_args.all, "run every suite");
  verify->add_flag("--fail-fast", verify_args.fail_fast,
                   "stop at the first failing suite");
  verify->add_flag("--serial", verify_args.serial,
                   "use the serial reference sweeps");
  verify->add_flag("--json", verify_args.json, "machine-readable output");

  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "deterministic SVG figures");
  render->add_option("scene", render_args.scene, "gd, gt, nd, projection")
      ->required();
  render->add_option("--depth", render_args.depth, "rows to draw")->required();
  render->add_option("--out", render_args.out_path, "output file (default stdout)");
  render->add_flag("--no-perspective", render_args.no_perspective,
                   "omit the vanishing-point rays in the projection scene");

  auto* cardinality =
      app.add_subcommand("cardinality", "fixed points of the row-size maps");

  std::vector<const char*> argv;
  argv.push_back("phinary");
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::optional<long> env_limit = read_env_depth_limit();
    if (*convert) return run_convert(convert_args, out);
    if (*succ) return run_succ(succ_args, out);
    if (*rankc) return run_rank(rank_args, out);
    if (*op) return run_op(op_args, out);
    if (*parityc) return run_parity(parity_value, out);
    if (*seq) return run_seq(seq_args, out);
    if (*tree) return run_tree(tree_args, out, env_limit);
    if (*verify) return run_verify(verify_args, out);
    if (*render) return run_render(render_args, out, err, env_limit);
    if (*cardinality) return run_cardinality(out);
  } catch (const ParseError& e) {
    err << "ParseError: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << error_name(e) << ": " << e.what() << "\n";
    return 1;
  }
  out << app.help();
  return 2;
}

}  // namespace phinary
