#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chw/error.hpp"
#include "chw/freelie/homl.hpp"
#include "chw/symplectic/multielem.hpp"
#include "chw/treediag/combo.hpp"

namespace chw::cli {

struct ParseError : Error {
  ParseError(std::size_t offset, const std::string& what);
  std::size_t offset;
};

// Raw s-expression with source offsets.
struct Sexp {
  std::string atom;
  std::vector<Sexp> list;
  bool is_list = false;
  std::size_t offset = 0;
};

// Reads every top-level form; `;` starts a comment running to end of line.
std::vector<Sexp> read_sexps(std::string_view src);
Sexp read_one(std::string_view src);

enum class ElementKind { Multi, Tree, Lie, HomL };

struct Element {
  ElementKind kind = ElementKind::Multi;
  sp::MultiElem multi;
  tree::TreeCombo tree;
  lie::LieElem lie;
  lie::HomLElem homl;
  // Set when the expression is a single tree literal.
  std::optional<tree::TreeDiagram> diagram;

  static Element of(sp::MultiElem x);
  static Element of(tree::TreeCombo x);
  static Element of(lie::LieElem x);
  static Element of(lie::HomLElem x);
};

Element evaluate(const Sexp& e, int genus);
Element parse_element(std::string_view src, int genus);

std::string to_sexpr(const Element& x);
bool operator==(const Element& x, const Element& y);

}  // namespace chw::cli
