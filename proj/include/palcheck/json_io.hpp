#pragma once

// JSON document formats for palettes, k-graphs, and reduced k-graphs,
// plus small file helpers. Loaders validate the whole document and
// throw InputError describing the FIRST violation with its path, e.g.
//   $.tuples[3][1]: unknown color label 'x'
// Unknown keys are ignored (documents may carry extra annotations such
// as a sampled coloring).

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "palcheck/kgraph.hpp"
#include "palcheck/palette.hpp"
#include "palcheck/reduced.hpp"

namespace palcheck {

using Json = nlohmann::json;

// Parses text as JSON; `origin` (a path or description) prefixes errors.
Json parse_json_text(const std::string& text, const std::string& origin);

Json load_json_file(const std::string& path);
void save_text_file(const std::string& path, const std::string& text);

// {"k": int, "colors": [label...], "tuples": [[label...]...]}
Palette palette_from_json(const Json& j);
Json palette_to_json(const Palette& p);

// {"n": int, "k": int, "edges": [[int...]...]} with an optional
// "order": [int...] (a permutation of 0..n-1) for ordered graphs.
struct KGraphDoc {
  KGraph graph;
  std::optional<std::vector<int>> order;
};
KGraphDoc kgraph_from_json(const Json& j);
Json kgraph_to_json(const KGraph& g, const std::vector<int>* order = nullptr);

// {"k": int, "index_set": [int...],
//  "classes": {"i1-i2-...": [vertex...], ...},
//  "constituents": {"i1-...-ik": [[vertex...]...], ...}}
// where every key is a sorted index subset joined by '-'.
ReducedKGraph reduced_from_json(const Json& j);
Json reduced_to_json(const ReducedKGraph& a);

}  // namespace palcheck
