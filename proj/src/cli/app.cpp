#include "chw/cli/app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <sstream>

#include "chw/chillingworth/checks.hpp"
#include "chw/chillingworth/johnson.hpp"
#include "chw/chillingworth/smap.hpp"
#include "chw/cli/parser.hpp"
#include "chw/error.hpp"
#include "chw/freelie/homl.hpp"
#include "chw/freelie/lyndon.hpp"
#include "chw/linalg/rational.hpp"
#include "chw/symplectic/equivariant.hpp"
#include "chw/symplectic/weights.hpp"
#include "chw/treediag/basis.hpp"
#include "chw/treediag/bch.hpp"

namespace chw::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  int genus = 0;
  std::vector<std::string> checks;
  std::string format = "text";
  int max_degree = 4;
  std::string out;
  std::string expr_path;
  std::string op;
  std::vector<std::string> exprs;
  std::string label;
  std::string space;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), {}}; }

std::vector<Element> operands(const Options& o) {
  std::vector<Element> out;
  for (const auto& e : o.exprs) out.push_back(parse_element(e, o.genus));
  if (!o.expr_path.empty()) {
    std::string text;
    if (o.expr_path == "-") {
      text = read_all(std::cin);
    } else {
      std::ifstream f(o.expr_path);
      if (!f) throw UsageError("cannot read " + o.expr_path);
      text = read_all(f);
    }
    for (const auto& s : read_sexps(text)) out.push_back(evaluate(s, o.genus));
  }
  return out;
}

void require_count(const std::vector<Element>& xs, std::size_t n, const std::string& op) {
  if (xs.size() != n) throw UsageError(op + " takes " + std::to_string(n) + " operand(s)");
}

const sp::MultiElem& multi(const Element& x, const std::string& op) {
  if (x.kind != ElementKind::Multi) throw SpaceMismatch(op + " needs a multilinear element");
  return x.multi;
}

const tree::TreeCombo& trees(const Element& x, const std::string& op) {
  if (x.kind != ElementKind::Tree) throw SpaceMismatch(op + " needs a tree combination");
  return x.tree;
}

const sp::MultiElem& wedge_k(const Element& x, int k, const std::string& op) {
  const auto& m = multi(x, op);
  if (!(m.space() == sp::space_wedge(k))) throw SpaceMismatch(op + " needs an element of Wedge^" + std::to_string(k) + " H");
  return m;
}

tree::GradedTreeElem graded(const tree::TreeCombo& x, int max_degree) {
  tree::GradedTreeElem g(x.genus(), max_degree);
  g.add(x);
  return g;
}

int cmd_eval(const Options& o, std::ostream& out) {
  sp::check_genus(o.genus);
  auto xs = operands(o);
  const std::string& op = o.op;
  if (op == "C3" || op == "C4" || op == "C6") {
    require_count(xs, 1, op);
    out << sp::to_sexpr(sp::contraction(wedge_k(xs[0], op[1] - '0', op))) << "\n";
  } else if (op == "eta") {
    require_count(xs, 1, op);
    out << to_sexpr(Element::of(tree::eta(trees(xs[0], op)))) << "\n";
  } else if (op == "q") {
    require_count(xs, 1, op);
    out << sp::to_sexpr(tree::q_map(trees(xs[0], op))) << "\n";
  } else if (op == "tr3") {
    require_count(xs, 1, op);
    out << sp::to_sexpr(tree::tr3(trees(xs[0], op))) << "\n";
  } else if (op == "s") {
    require_count(xs, 1, op);
    out << sp::to_sexpr(ch::s_map(multi(xs[0], op))) << "\n";
  } else if (op == "brack") {
    require_count(xs, 1, op);
    if (!xs[0].diagram) throw SpaceMismatch("brack needs a single tree literal");
    out << to_sexpr(Element::of(tree::brack(*xs[0].diagram, 0))) << "\n";
  } else if (op == "tree-bracket") {
    require_count(xs, 2, op);
    out << tree::to_sexpr(tree::tree_bracket(trees(xs[0], op), trees(xs[1], op))) << "\n";
  } else if (op == "bch") {
    require_count(xs, 2, op);
    auto r = tree::bch_truncated(graded(trees(xs[0], op), o.max_degree), graded(trees(xs[1], op), o.max_degree),
                                 o.max_degree);
    bool any = false;
    for (const auto& [d, part] : r.parts) {
      if (part.is_zero()) continue;
      out << "degree " << d << ": " << tree::to_sexpr(part) << "\n";
      any = true;
    }
    if (!any) out << "0\n";
  } else {
    throw UsageError("unknown operation " + op);
  }
  return kExitOk;
}

int cmd_dims(const Options& o, std::ostream& out) {
  sp::check_genus(o.genus);
  auto label = sp::IrrepLabel::parse(o.label);
  out << linalg::to_string(sp::weyl_dim(label, o.genus)) << "\n";
  return kExitOk;
}

int parse_degree(const std::string& text) {
  std::size_t used = 0;
  int d = 0;
  try {
    d = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw UsageError("bad degree " + text);
  }
  if (used != text.size() || d < 1) throw UsageError("bad degree " + text);
  return d;
}

// Standard bracketing of a Lyndon word.
std::string lyndon_sexpr(const sp::Word& w) {
  if (w.size() == 1) return sp::symbol_name(w[0]);
  auto [u, v] = lie::standard_factorization(w);
  return "(bracket " + lyndon_sexpr(u) + " " + lyndon_sexpr(v) + ")";
}

int cmd_basis(const Options& o, std::ostream& out) {
  sp::check_genus(o.genus);
  std::vector<std::string> lines;
  const std::string& s = o.space;
  auto colon = s.find(':');
  std::string kind = s.substr(0, colon);
  if (s == "U") {
    for (const auto& u : ch::u_basis(o.genus)) lines.push_back(sp::to_sexpr(u));
  } else if (colon != std::string::npos && kind == "L") {
    int d = parse_degree(s.substr(colon + 1));
    for (const auto& w : lie::lyndon_basis(o.genus, d)) lines.push_back(lyndon_sexpr(w));
  } else if (colon != std::string::npos && kind == "T") {
    int d = parse_degree(s.substr(colon + 1));
    for (const auto& k : tree::basis_keys(o.genus, d)) lines.push_back(tree::key_sexpr(k));
  } else if (colon != std::string::npos && kind == "h") {
    int i = parse_degree(s.substr(colon + 1));
    for (const auto& x : lie::h_kernel_basis(o.genus, i)) lines.push_back(lie::to_sexpr(x));
  } else {
    throw UsageError("unknown space " + s + " (expected U, L:d, T:d or h:i)");
  }
  out << "; " << lines.size() << " elements\n";
  for (const auto& l : lines) out << l << "\n";
  return kExitOk;
}

std::string text_report(const std::vector<ch::CheckReport>& reports) {
  std::ostringstream os;
  int counts[3] = {0, 0, 0};
  for (const auto& r : reports) {
    ++counts[static_cast<int>(r.status)];
    os << ch::to_string(r.status) << " " << r.name << " genus=" << r.genus << " runtime_ms=" << r.runtime_us / 1000
       << "\n";
    if (r.status != ch::CheckStatus::Pass) {
      os << "  expected: " << r.expected << "\n";
      os << "  actual:   " << r.actual << "\n";
    }
  }
  os << reports.size() << " checks: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2] << " warn\n";
  return os.str();
}

std::string json_report(const std::vector<ch::CheckReport>& reports) {
  auto arr = nlohmann::json::array();
  for (const auto& r : reports)
    arr.push_back({{"name", r.name},
                   {"genus", r.genus},
                   {"status", ch::to_string(r.status)},
                   {"expected", r.expected},
                   {"actual", r.actual},
                   {"runtime_ms", r.runtime_us / 1000}});
  return arr.dump(2) + "\n";
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.genus < 2 || o.genus > ch::kMaxVerifyGenus)
    throw UsageError("genus must be in 2.." + std::to_string(ch::kMaxVerifyGenus));
  if (o.format != "text" && o.format != "json") throw UsageError("format must be text or json");
  std::vector<std::string> filter;
  for (const auto& c : o.checks) {
    if (c == "all") {
      filter.clear();
      break;
    }
    if (!ch::is_check_name(c)) throw UsageError("unknown check " + c);
    filter.push_back(c);
  }
  auto reports = ch::verify_all(o.genus, filter);
  std::string text = o.format == "json" ? json_report(reports) : text_report(reports);
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << text;
  }
  for (const auto& r : reports)
    if (r.status == ch::CheckStatus::Fail) return kExitFail;
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for the Chillingworth subgroup computations"};
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "Run named checks");
  verify->add_option("--genus", o.genus, "Genus")->required();
  verify->add_option("--check", o.checks, "Check name or all (repeatable)");
  verify->add_option("--format", o.format, "text or json");
  verify->add_option("--max-degree", o.max_degree, "Truncation degree");
  verify->add_option("--out", o.out, "Report path");

  auto* eval = app.add_subcommand("eval", "Evaluate an operation on element expressions");
  eval->add_option("--genus", o.genus, "Genus")->required();
  eval->add_option("op", o.op, "C3, C4, C6, eta, q, tr3, s, brack, tree-bracket or bch")->required();
  eval->add_option("exprs", o.exprs, "Element expressions");
  eval->add_option("--expr", o.expr_path, "File with element expressions, - for stdin");
  eval->add_option("--max-degree", o.max_degree, "Truncation degree for bch");

  auto* dims = app.add_subcommand("dims", "Weyl dimension of an irreducible label");
  dims->add_option("--genus", o.genus, "Genus")->required();
  dims->add_option("label", o.label, "Label n1,n2,...")->required();

  auto* basis = app.add_subcommand("basis", "Enumerate a basis");
  basis->add_option("--genus", o.genus, "Genus")->required();
  basis->add_option("space", o.space, "U, L:d, T:d or h:i")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(o, out);
    if (eval->parsed()) return cmd_eval(o, out);
    if (dims->parsed()) return cmd_dims(o, out);
    return cmd_basis(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace chw::cli
