#pragma once

#include <iosfwd>
#include <string>

#include "casforest/forest.hpp"

namespace casforest {

// CAF1 text format, one line per element:
//   CAF1 m=<m> d=<d> n=<n> alphabet=<symbols> orientation=<...>
//   N <id> <level> <symbol> <parent-id|->
//   X <id> <leaf-node-id> <motif> <string-bits-hex>
// Lines beginning '#' are comments. Nodes precede exits, both by id.
void serialize(std::ostream& out, const Forest& f);
std::string serialize(const Forest& f);

// Rebuilds a forest, validating structure as it goes (well-formed header,
// resolvable ids, one exit per leaf, distinct sibling symbols, motifs that
// match their paths). Errors name the offending line. Ids are renumbered
// into canonical breadth-first order, so re-serializing a deserialized
// forest always yields the canonical file.
Forest deserialize(std::istream& in);
Forest deserialize(const std::string& text);

Forest load_forest_file(const std::string& path);
void save_forest_file(const std::string& path, const Forest& f);

}  // namespace casforest
