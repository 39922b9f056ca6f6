#include "chw/chillingworth/fixtures.hpp"

#include <string_view>

namespace chw::ch {

extern const std::string_view kFixtureText;

namespace {

std::vector<FixtureEntry> load() {
  std::vector<FixtureEntry> out;
  for (auto& form : cli::read_sexps(kFixtureText)) {
    if (!form.is_list || form.list.size() != 4 || form.list[0].is_list || form.list[0].atom != "value" ||
        form.list[1].is_list || form.list[2].is_list)
      throw cli::ParseError(form.offset, "malformed fixture record");
    FixtureEntry e;
    e.id = form.list[1].atom;
    e.min_genus = std::stoi(form.list[2].atom);
    e.expr = std::move(form.list[3]);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<FixtureEntry>& fixture_entries() {
  static const std::vector<FixtureEntry> entries = load();
  return entries;
}

const FixtureEntry& fixture_entry(const std::string& id) {
  for (const auto& e : fixture_entries())
    if (e.id == id) return e;
  throw Error("unknown fixture " + id);
}

cli::Element fixture(const std::string& id, int genus) {
  const auto& e = fixture_entry(id);
  if (genus < e.min_genus)
    throw UnsupportedGenus("fixture " + id + " needs genus >= " + std::to_string(e.min_genus));
  return cli::evaluate(e.expr, genus);
}

sp::MultiElem fixture_multi(const std::string& id, int genus) {
  auto x = fixture(id, genus);
  if (x.kind != cli::ElementKind::Multi) throw SpaceMismatch("fixture " + id + " is not a multilinear element");
  return x.multi;
}

tree::TreeCombo fixture_tree(const std::string& id, int genus) {
  auto x = fixture(id, genus);
  if (x.kind != cli::ElementKind::Tree) throw SpaceMismatch("fixture " + id + " is not a tree combination");
  return x.tree;
}

}  // namespace chw::ch
