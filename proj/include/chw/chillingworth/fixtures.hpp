#pragma once

#include <string>
#include <vector>

#include "chw/cli/parser.hpp"

namespace chw::ch {

// One `(value <id> <minimum genus> <element>)` record of the embedded
// reference fixture file.
struct FixtureEntry {
  std::string id;
  int min_genus = 3;
  cli::Sexp expr;
};

const std::vector<FixtureEntry>& fixture_entries();
const FixtureEntry& fixture_entry(const std::string& id);

// Evaluates the entry at `genus`; throws UnsupportedGenus below its minimum.
cli::Element fixture(const std::string& id, int genus);
sp::MultiElem fixture_multi(const std::string& id, int genus);
tree::TreeCombo fixture_tree(const std::string& id, int genus);

}  // namespace chw::ch
