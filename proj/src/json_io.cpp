#include "palcheck/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "palcheck/errors.hpp"

namespace palcheck {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<int>();
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

const Json& member(const Json& j, const std::string& key,
                   const std::string& path) {
  if (!j.is_object()) bad(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) bad(path, "missing required key \"" + key + "\"");
  return *it;
}

void require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
}

std::string idx(const std::string& path, size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

// Key of a classes/constituents entry: sorted distinct indices joined
// by '-', e.g. "1-3".
std::vector<int> parse_subset_key(const std::string& key,
                                  const std::string& path) {
  std::vector<int> out;
  std::string piece;
  std::istringstream in(key);
  while (std::getline(in, piece, '-')) {
    if (piece.empty() || piece.find_first_not_of("0123456789") !=
                             std::string::npos) {
      bad(path, "key \"" + key + "\" is not a '-'-joined list of indices");
    }
    out.push_back(std::stoi(piece));
  }
  if (out.empty()) {
    bad(path, "key \"" + key + "\" is not a '-'-joined list of indices");
  }
  if (!std::is_sorted(out.begin(), out.end()) ||
      std::adjacent_find(out.begin(), out.end()) != out.end()) {
    bad(path, "key \"" + key + "\" must list strictly increasing indices");
  }
  return out;
}

std::string subset_key(const std::vector<int>& subset) {
  std::string key;
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) key += "-";
    key += std::to_string(subset[i]);
  }
  return key;
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& origin) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw InputError(origin + ": not valid JSON");
  }
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError(path + ": cannot open file for writing");
  out << text;
  if (!out) throw InputError(path + ": write failed");
}

Palette palette_from_json(const Json& j) {
  const int k = as_int(member(j, "k", "$"), "$.k");

  const Json& jcolors = member(j, "colors", "$");
  require_array(jcolors, "$.colors");
  std::vector<std::string> labels;
  std::map<std::string, int> ids;
  for (size_t i = 0; i < jcolors.size(); ++i) {
    const std::string path = idx("$.colors", i);
    std::string label = as_string(jcolors[i], path);
    if (label.empty()) bad(path, "color label must not be empty");
    if (!ids.emplace(label, static_cast<int>(i)).second) {
      bad(path, "duplicate color label '" + label + "'");
    }
    labels.push_back(std::move(label));
  }

  const Json& jtuples = member(j, "tuples", "$");
  require_array(jtuples, "$.tuples");
  std::vector<std::vector<int>> tuples;
  for (size_t i = 0; i < jtuples.size(); ++i) {
    const std::string tpath = idx("$.tuples", i);
    require_array(jtuples[i], tpath);
    if (static_cast<int>(jtuples[i].size()) != k) {
      bad(tpath, "expected " + std::to_string(k) + " entries, got " +
                     std::to_string(jtuples[i].size()));
    }
    std::vector<int> tuple;
    for (size_t c = 0; c < jtuples[i].size(); ++c) {
      const std::string cpath = idx(tpath, c);
      const std::string label = as_string(jtuples[i][c], cpath);
      const auto it = ids.find(label);
      if (it == ids.end()) bad(cpath, "unknown color label '" + label + "'");
      tuple.push_back(it->second);
    }
    tuples.push_back(std::move(tuple));
  }

  Palette p;
  p.k = k;
  p.num_colors = static_cast<int>(labels.size());
  p.labels = std::move(labels);
  p.tuples = std::move(tuples);
  p.canonicalize();
  p.validate();
  return p;
}

Json palette_to_json(const Palette& p) {
  Json j;
  j["k"] = p.k;
  j["colors"] = p.labels;
  Json tuples = Json::array();
  for (const auto& t : p.tuples) {
    Json row = Json::array();
    for (int c : t) row.push_back(p.labels[static_cast<size_t>(c)]);
    tuples.push_back(std::move(row));
  }
  j["tuples"] = std::move(tuples);
  return j;
}

KGraphDoc kgraph_from_json(const Json& j) {
  KGraphDoc doc;
  doc.graph.n = as_int(member(j, "n", "$"), "$.n");
  doc.graph.k = as_int(member(j, "k", "$"), "$.k");

  const Json& jedges = member(j, "edges", "$");
  require_array(jedges, "$.edges");
  for (size_t i = 0; i < jedges.size(); ++i) {
    const std::string epath = idx("$.edges", i);
    require_array(jedges[i], epath);
    std::vector<int> edge;
    for (size_t v = 0; v < jedges[i].size(); ++v) {
      const std::string vpath = idx(epath, v);
      const int vertex = as_int(jedges[i][v], vpath);
      if (vertex < 0 || vertex >= doc.graph.n) {
        bad(vpath, "vertex " + std::to_string(vertex) +
                       " out of range [0," + std::to_string(doc.graph.n) +
                       ")");
      }
      edge.push_back(vertex);
    }
    doc.graph.edges.push_back(std::move(edge));
  }
  doc.graph.canonicalize();
  doc.graph.validate();

  if (const auto it = j.find("order"); it != j.end()) {
    require_array(*it, "$.order");
    std::vector<int> order;
    for (size_t i = 0; i < it->size(); ++i) {
      order.push_back(as_int((*it)[i], idx("$.order", i)));
    }
    if (static_cast<int>(order.size()) != doc.graph.n) {
      bad("$.order", "expected " + std::to_string(doc.graph.n) +
                         " entries, got " + std::to_string(order.size()));
    }
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
      if (sorted[static_cast<size_t>(i)] != i) {
        bad("$.order", "not a permutation of 0.." +
                           std::to_string(doc.graph.n - 1));
      }
    }
    doc.order = std::move(order);
  }
  return doc;
}

Json kgraph_to_json(const KGraph& g, const std::vector<int>* order) {
  Json j;
  j["n"] = g.n;
  j["k"] = g.k;
  j["edges"] = g.edges;
  if (order != nullptr) j["order"] = *order;
  return j;
}

ReducedKGraph reduced_from_json(const Json& j) {
  ReducedKGraph a;
  a.k = as_int(member(j, "k", "$"), "$.k");

  const Json& jindex = member(j, "index_set", "$");
  require_array(jindex, "$.index_set");
  for (size_t i = 0; i < jindex.size(); ++i) {
    a.index_set.push_back(as_int(jindex[i], idx("$.index_set", i)));
  }

  const Json& jclasses = member(j, "classes", "$");
  if (!jclasses.is_object()) bad("$.classes", "expected an object");
  for (const auto& [key, value] : jclasses.items()) {
    const std::string path = "$.classes[\"" + key + "\"]";
    const std::vector<int> subset = parse_subset_key(key, path);
    require_array(value, path);
    std::vector<std::string> names;
    for (size_t i = 0; i < value.size(); ++i) {
      names.push_back(as_string(value[i], idx(path, i)));
    }
    a.classes[subset] = std::move(names);
  }

  const Json& jcons = member(j, "constituents", "$");
  if (!jcons.is_object()) bad("$.constituents", "expected an object");
  for (const auto& [key, value] : jcons.items()) {
    const std::string path = "$.constituents[\"" + key + "\"]";
    const std::vector<int> subset = parse_subset_key(key, path);
    require_array(value, path);
    std::vector<std::vector<std::string>> edges;
    for (size_t i = 0; i < value.size(); ++i) {
      const std::string epath = idx(path, i);
      require_array(value[i], epath);
      std::vector<std::string> edge;
      for (size_t v = 0; v < value[i].size(); ++v) {
        edge.push_back(as_string(value[i][v], idx(epath, v)));
      }
      edges.push_back(std::move(edge));
    }
    a.constituents[subset] = std::move(edges);
  }

  a.canonicalize();
  a.validate();
  return a;
}

Json reduced_to_json(const ReducedKGraph& a) {
  Json j;
  j["k"] = a.k;
  j["index_set"] = a.index_set;
  Json classes = Json::object();
  for (const auto& [key, names] : a.classes) {
    classes[subset_key(key)] = names;
  }
  j["classes"] = std::move(classes);
  Json cons = Json::object();
  for (const auto& [key, edges] : a.constituents) {
    cons[subset_key(key)] = edges;
  }
  j["constituents"] = std::move(cons);
  return j;
}

}  // namespace palcheck
