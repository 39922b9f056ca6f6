#include "chw/cli/parser.hpp"

#include <cctype>

#include "chw/freelie/lyndon.hpp"
#include "chw/linalg/rational.hpp"

namespace chw::cli {

using linalg::Rational;

ParseError::ParseError(std::size_t off, const std::string& what)
    : Error("offset " + std::to_string(off) + ": " + what), offset(off) {}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  void skip() {
    while (i_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[i_]))) {
        ++i_;
      } else if (s_[i_] == ';') {
        while (i_ < s_.size() && s_[i_] != '\n') ++i_;
      } else {
        break;
      }
    }
  }

  bool done() {
    skip();
    return i_ >= s_.size();
  }

  Sexp read() {
    skip();
    if (i_ >= s_.size()) throw ParseError(i_, "unexpected end of input");
    Sexp out;
    out.offset = i_;
    if (s_[i_] == ')') throw ParseError(i_, "unexpected ')'");
    if (s_[i_] == '(') {
      out.is_list = true;
      ++i_;
      for (;;) {
        skip();
        if (i_ >= s_.size()) throw ParseError(out.offset, "unclosed '('");
        if (s_[i_] == ')') {
          ++i_;
          break;
        }
        out.list.push_back(read());
      }
      if (out.list.empty()) throw ParseError(out.offset, "empty form");
      return out;
    }
    std::size_t start = i_;
    while (i_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[i_])) && s_[i_] != '(' &&
           s_[i_] != ')' && s_[i_] != ';')
      ++i_;
    out.atom = std::string(s_.substr(start, i_ - start));
    return out;
  }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

bool is_number(const std::string& a) {
  if (a.empty()) return false;
  char c = a[0];
  return std::isdigit(static_cast<unsigned char>(c)) || ((c == '-' || c == '+') && a.size() > 1);
}

[[noreturn]] void fail(const Sexp& e, const std::string& what) { throw ParseError(e.offset, what); }

const std::string& head(const Sexp& e) {
  static const std::string kNone;
  return e.is_list && !e.list.front().is_list ? e.list.front().atom : kNone;
}

Rational number(const Sexp& e) {
  if (e.is_list || !is_number(e.atom)) fail(e, "expected a rational literal");
  try {
    return linalg::parse_rational(e.atom);
  } catch (const std::exception&) {
    fail(e, "malformed rational literal '" + e.atom + "'");
  }
}

sp::HElem to_h(const Element& x, const Sexp& at) {
  if (x.kind != ElementKind::Multi || !(x.multi.space() == sp::space_h())) fail(at, "expected an element of H");
  sp::HElem h(x.multi.genus());
  for (const auto& [w, c] : x.multi.terms()) h += sp::HElem::basis(h.genus, w[0], c);
  return h;
}

lie::LieElem to_lie(const Element& x, const Sexp& at) {
  if (x.kind == ElementKind::Lie) return x.lie;
  sp::HElem h = to_h(x, at);
  lie::LieElem out(h.genus);
  for (const auto& [s, c] : h.coeffs) out += lie::LieElem::generator(h.genus, s, c);
  return out;
}

void require_arity(const Sexp& e, std::size_t n) {
  if (e.list.size() != n + 1)
    fail(e, "'" + head(e) + "' takes " + std::to_string(n) + " arguments, got " + std::to_string(e.list.size() - 1));
}

tree::Planar planar(const Sexp& e, int genus);

sp::HElem label(const Sexp& e, int genus) { return to_h(evaluate(e, genus), e); }

tree::Planar planar(const Sexp& e, int genus) {
  if (e.is_list && head(e) != "+" && head(e) != "*") {
    if (e.list.size() != 2) fail(e, "subtree must have exactly two children");
    return tree::Planar::node(planar(e.list[0], genus), planar(e.list[1], genus));
  }
  return tree::Planar::of(label(e, genus));
}

Element tree_element(const tree::TreeDiagram& t, const Sexp& at) {
  try {
    Element out = Element::of(tree::expand_multilinear(t));
    out.diagram = t;
    return out;
  } catch (const Error& err) {
    fail(at, err.what());
  }
}

Element add(Element x, const Element& y, const Sexp& at) {
  if (x.kind != y.kind) fail(at, "cannot add elements of different kinds");
  try {
    switch (x.kind) {
      case ElementKind::Multi: x.multi += y.multi; break;
      case ElementKind::Tree: x.tree += y.tree; break;
      case ElementKind::Lie: x.lie += y.lie; break;
      case ElementKind::HomL: x.homl += y.homl; break;
    }
  } catch (const Error& err) {
    fail(at, err.what());
  }
  x.diagram.reset();
  return x;
}

Element scale(Element x, const Rational& c) {
  x.multi *= c;
  x.tree *= c;
  x.lie *= c;
  x.homl *= c;
  if (c != 1) x.diagram.reset();
  return x;
}

Element wedge(const Sexp& e, int genus) {
  std::vector<Element> args;
  for (std::size_t i = 1; i < e.list.size(); ++i) args.push_back(evaluate(e.list[i], genus));
  const auto& first = args.front();
  if (first.kind == ElementKind::Multi && first.multi.space() == sp::space_h()) {
    std::vector<sp::HElem> hs;
    for (std::size_t i = 0; i < args.size(); ++i) hs.push_back(to_h(args[i], e.list[i + 1]));
    std::vector<const sp::HElem*> ptrs;
    for (const auto& h : hs) ptrs.push_back(&h);
    sp::MultiElem out(genus, sp::space_wedge(static_cast<int>(hs.size())));
    sp::expand_letters(ptrs, 1, out);
    return Element::of(out);
  }
  std::vector<sp::MultiElem> ms;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].kind != ElementKind::Multi) fail(e.list[i + 1], "wedge arguments must be multilinear elements");
    ms.push_back(args[i].multi);
  }
  try {
    return Element::of(sp::outer_wedge(ms));
  } catch (const Error& err) {
    fail(e, err.what());
  }
}

Element tensor_form(const Sexp& e, int genus) {
  std::vector<Element> args;
  for (std::size_t i = 1; i < e.list.size(); ++i) args.push_back(evaluate(e.list[i], genus));
  if (args.size() == 2 && args[1].kind == ElementKind::Lie) {
    sp::HElem tag = to_h(args[0], e.list[1]);
    lie::Tensor t;
    lie::Tensor body = lie::embed_tensor(args[1].lie);
    for (const auto& [s, c] : tag.coeffs)
      for (const auto& [w, d] : body) linalg::add_term(t, sp::concat(sp::Word{s}, w), c * d);
    return Element::of(lie::homl_from_tensor(genus, t));
  }
  sp::MultiElem out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].kind != ElementKind::Multi) fail(e.list[i + 1], "tensor arguments must be multilinear elements");
    try {
      out = i == 0 ? args[i].multi : sp::tensor(out, args[i].multi);
    } catch (const Error& err) {
      fail(e.list[i + 1], err.what());
    }
  }
  return Element::of(out);
}

Element sym(const Sexp& e, int genus) {
  std::vector<sp::HElem> hs;
  for (std::size_t i = 1; i < e.list.size(); ++i) hs.push_back(label(e.list[i], genus));
  std::vector<const sp::HElem*> ptrs;
  for (const auto& h : hs) ptrs.push_back(&h);
  sp::MultiElem out(genus, sp::space_sym(static_cast<int>(hs.size())));
  sp::expand_letters(ptrs, 1, out);
  return Element::of(out);
}

}  // namespace

std::vector<Sexp> read_sexps(std::string_view src) {
  Reader r(src);
  std::vector<Sexp> out;
  while (!r.done()) out.push_back(r.read());
  return out;
}

Sexp read_one(std::string_view src) {
  Reader r(src);
  Sexp e = r.read();
  if (!r.done()) throw ParseError(e.offset, "trailing input after expression");
  return e;
}

Element Element::of(sp::MultiElem x) {
  Element e;
  e.kind = ElementKind::Multi;
  e.multi = std::move(x);
  return e;
}

Element Element::of(tree::TreeCombo x) {
  Element e;
  e.kind = ElementKind::Tree;
  e.tree = std::move(x);
  return e;
}

Element Element::of(lie::LieElem x) {
  Element e;
  e.kind = ElementKind::Lie;
  e.lie = std::move(x);
  return e;
}

Element Element::of(lie::HomLElem x) {
  Element e;
  e.kind = ElementKind::HomL;
  e.homl = std::move(x);
  return e;
}

Element evaluate(const Sexp& e, int genus) {
  if (!e.is_list) {
    if (is_number(e.atom)) {
      sp::MultiElem s(genus, sp::make_space({}));
      s.add_word(sp::Word{}, number(e));
      return Element::of(s);
    }
    try {
      return Element::of(sp::basis_elem(genus, sp::space_h(), {sp::parse_symbol(e.atom, genus)}));
    } catch (const Error& err) {
      fail(e, err.what());
    }
  }
  const std::string& h = head(e);
  const std::size_t n = e.list.size() - 1;
  if (h == "+") {
    if (n == 0) fail(e, "'+' needs at least one argument");
    Element acc = evaluate(e.list[1], genus);
    for (std::size_t i = 2; i <= n; ++i) acc = add(acc, evaluate(e.list[i], genus), e.list[i]);
    return acc;
  }
  if (h == "*") {
    require_arity(e, 2);
    return scale(evaluate(e.list[2], genus), number(e.list[1]));
  }
  if (h == "wedge") {
    if (n == 0) fail(e, "'wedge' needs at least one argument");
    return wedge(e, genus);
  }
  if (h == "tensor") {
    if (n == 0) fail(e, "'tensor' needs at least one argument");
    return tensor_form(e, genus);
  }
  if (h == "sym") {
    if (n == 0) fail(e, "'sym' needs at least one argument");
    return sym(e, genus);
  }
  if (h == "bracket") {
    require_arity(e, 2);
    return Element::of(lie::lie_bracket(to_lie(evaluate(e.list[1], genus), e.list[1]),
                                        to_lie(evaluate(e.list[2], genus), e.list[2])));
  }
  if (h == "tripod") {
    require_arity(e, 3);
    return tree_element(tree::tripod(label(e.list[1], genus), label(e.list[2], genus), label(e.list[3], genus)), e);
  }
  if (h == "htree") {
    require_arity(e, 4);
    return tree_element(tree::htree(label(e.list[1], genus), label(e.list[2], genus), label(e.list[3], genus),
                                    label(e.list[4], genus)),
                        e);
  }
  if (h == "tree5") {
    require_arity(e, 5);
    return tree_element(tree::tree5(label(e.list[1], genus), label(e.list[2], genus), label(e.list[3], genus),
                                    label(e.list[4], genus), label(e.list[5], genus)),
                        e);
  }
  if (h == "rooted") {
    require_arity(e, 3);
    auto body = tree::Planar::node(planar(e.list[2], genus), planar(e.list[3], genus));
    return tree_element(tree::from_rooted(label(e.list[1], genus), body), e);
  }
  fail(e, h.empty() ? "form must start with an operator" : "unknown form '" + h + "'");
}

Element parse_element(std::string_view src, int genus) { return evaluate(read_one(src), genus); }

std::string to_sexpr(const Element& x) {
  switch (x.kind) {
    case ElementKind::Multi: return sp::to_sexpr(x.multi);
    case ElementKind::Tree: return tree::to_sexpr(x.tree);
    case ElementKind::Lie: return lie::to_sexpr(x.lie);
    case ElementKind::HomL: return lie::to_sexpr(x.homl);
  }
  return "";
}

bool operator==(const Element& x, const Element& y) {
  if (x.kind != y.kind) return false;
  switch (x.kind) {
    case ElementKind::Multi: return x.multi == y.multi;
    case ElementKind::Tree: return x.tree == y.tree;
    case ElementKind::Lie: return x.lie == y.lie;
    case ElementKind::HomL: return x.homl == y.homl;
  }
  return false;
}

}  // namespace chw::cli
