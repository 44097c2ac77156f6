#include "palcheck/reduced.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "palcheck/csp.hpp"
#include "palcheck/errors.hpp"
#include "palcheck/rng.hpp"

namespace palcheck {

namespace {

std::string join_key(const std::vector<int>& key) {
  std::ostringstream out;
  for (std::size_t i = 0; i < key.size(); ++i) {
    if (i) out << '-';
    out << key[i];
  }
  return out.str();
}

// Vertex name -> (class key, position within that class's vertex list).
using NameIndex =
    std::map<std::string, std::pair<std::vector<int>, int>>;

NameIndex build_name_index(const ReducedKGraph& a) {
  NameIndex index;
  for (const auto& [key, names] : a.classes) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      index.emplace(names[i], std::make_pair(key, static_cast<int>(i)));
    }
  }
  return index;
}

BigInt class_size_product(const ReducedKGraph& a, const std::vector<int>& Y) {
  BigInt product = 1;
  for (std::size_t j = 0; j < Y.size(); ++j) {
    std::vector<int> X = Y;
    X.erase(X.begin() + static_cast<std::ptrdiff_t>(j));
    product *= static_cast<int>(a.classes.at(X).size());
  }
  return product;
}

}  // namespace

std::vector<std::vector<int>> subsets_of(const std::vector<int>& base,
                                         int r) {
  std::vector<std::vector<int>> result;
  if (r < 0 || r > static_cast<int>(base.size())) return result;
  std::vector<int> idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i;
  const int n = static_cast<int>(base.size());
  for (;;) {
    std::vector<int> subset(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      subset[static_cast<std::size_t>(i)] =
          base[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    result.push_back(std::move(subset));
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return result;
}

void ReducedKGraph::canonicalize() {
  for (auto& [key, edges] : constituents) {
    for (auto& edge : edges) std::sort(edge.begin(), edge.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  }
}

void ReducedKGraph::validate() const {
  if (k < 2 || k > 9) {
    throw InputError("reduced graph: k must be between 2 and 9, got " +
                     std::to_string(k));
  }
  if (!std::is_sorted(index_set.begin(), index_set.end()) ||
      std::adjacent_find(index_set.begin(), index_set.end()) !=
          index_set.end()) {
    throw InputError("reduced graph: index set must be strictly increasing");
  }
  if (static_cast<int>(index_set.size()) < k) {
    throw InputError("reduced graph: index set smaller than k");
  }

  const auto class_keys = subsets_of(index_set, k - 1);
  if (classes.size() != class_keys.size()) {
    throw InputError("reduced graph: expected " +
                     std::to_string(class_keys.size()) +
                     " vertex classes, got " + std::to_string(classes.size()));
  }
  std::set<std::string> seen_names;
  for (const auto& key : class_keys) {
    const auto it = classes.find(key);
    if (it == classes.end()) {
      throw InputError("reduced graph: missing vertex class " + join_key(key));
    }
    if (it->second.empty()) {
      throw InputError("reduced graph: vertex class " + join_key(key) +
                       " is empty");
    }
    for (const auto& name : it->second) {
      if (name.empty()) {
        throw InputError("reduced graph: empty vertex name in class " +
                         join_key(key));
      }
      if (!seen_names.insert(name).second) {
        throw InputError("reduced graph: vertex name '" + name +
                         "' appears in more than one class");
      }
    }
  }

  const auto constituent_keys = subsets_of(index_set, k);
  if (constituents.size() != constituent_keys.size()) {
    throw InputError("reduced graph: expected " +
                     std::to_string(constituent_keys.size()) +
                     " constituents, got " +
                     std::to_string(constituents.size()));
  }
  const NameIndex names = build_name_index(*this);
  for (const auto& Y : constituent_keys) {
    const auto it = constituents.find(Y);
    if (it == constituents.end()) {
      throw InputError("reduced graph: missing constituent " + join_key(Y));
    }
    for (const auto& edge : it->second) {
      if (static_cast<int>(edge.size()) != k) {
        throw InputError("reduced graph: constituent " + join_key(Y) +
                         " has an edge with " + std::to_string(edge.size()) +
                         " vertices (expected " + std::to_string(k) + ")");
      }
      std::set<std::vector<int>> parts_hit;
      for (const auto& name : edge) {
        const auto found = names.find(name);
        if (found == names.end()) {
          throw InputError("reduced graph: constituent " + join_key(Y) +
                           " uses unknown vertex '" + name + "'");
        }
        const std::vector<int>& X = found->second.first;
        if (!std::includes(Y.begin(), Y.end(), X.begin(), X.end())) {
          throw InputError("reduced graph: constituent " + join_key(Y) +
                           " uses vertex '" + name + "' from class " +
                           join_key(X) + " outside the constituent");
        }
        if (!parts_hit.insert(X).second) {
          throw InputError("reduced graph: constituent " + join_key(Y) +
                           " has an edge with two vertices in class " +
                           join_key(X));
        }
      }
    }
  }
}

const std::vector<int>& ReducedKGraph::class_of(
    const std::string& vertex) const {
  for (const auto& [key, names] : classes) {
    if (std::find(names.begin(), names.end(), vertex) != names.end()) {
      return key;
    }
  }
  throw InputError("reduced graph: unknown vertex '" + vertex + "'");
}

ReducedKGraph from_palette(const Palette& p, int m) {
  p.validate();
  if (m < p.k) {
    throw InputError("from_palette: index set size " + std::to_string(m) +
                     " is smaller than k = " + std::to_string(p.k));
  }
  const BigInt num_names = binomial(m, p.k - 1) * p.num_colors;
  if (num_names > kMaxProductColors) {
    throw InfeasibleError("from_palette: would create " + num_names.str() +
                          " class vertices (limit " +
                          std::to_string(kMaxProductColors) + ")");
  }
  const BigInt num_edges = binomial(m, p.k) * static_cast<int>(p.tuples.size());
  if (num_edges > kMaxProductTuples) {
    throw InfeasibleError("from_palette: would create " + num_edges.str() +
                          " constituent edges (limit " +
                          std::to_string(kMaxProductTuples) + ")");
  }

  ReducedKGraph a;
  a.k = p.k;
  a.index_set.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) a.index_set[static_cast<std::size_t>(i)] = i + 1;

  for (const auto& X : subsets_of(a.index_set, p.k - 1)) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(p.num_colors));
    for (int c = 0; c < p.num_colors; ++c) {
      names.push_back(join_key(X) + ":" + p.labels[static_cast<std::size_t>(c)]);
    }
    a.classes.emplace(X, std::move(names));
  }

  for (const auto& Y : subsets_of(a.index_set, p.k)) {
    std::vector<std::vector<std::string>> edges;
    edges.reserve(p.tuples.size());
    for (const auto& tup : p.tuples) {
      std::vector<std::string> edge;
      edge.reserve(static_cast<std::size_t>(p.k));
      for (int j = 0; j < p.k; ++j) {
        std::vector<int> X = Y;
        X.erase(X.begin() + j);
        edge.push_back(join_key(X) + ":" +
                       p.labels[static_cast<std::size_t>(
                           tup[static_cast<std::size_t>(j)])]);
      }
      edges.push_back(std::move(edge));
    }
    a.constituents.emplace(Y, std::move(edges));
  }
  a.canonicalize();
  return a;
}

DenseCheck is_d_dense(const ReducedKGraph& a, const Rational& d) {
  a.validate();
  DenseCheck result;
  for (const auto& [Y, edges] : a.constituents) {
    const Rational density(static_cast<int>(edges.size()),
                           class_size_product(a, Y));
    if (density < d) {
      result.dense = false;
      result.violating_Y = Y;
      result.worst = density;
      return result;
    }
  }
  return result;
}

Rational min_constituent_density(const ReducedKGraph& a) {
  a.validate();
  Rational best = 1;
  bool first = true;
  for (const auto& [Y, edges] : a.constituents) {
    const Rational density(static_cast<int>(edges.size()),
                           class_size_product(a, Y));
    if (first || density < best) {
      best = density;
      first = false;
    }
  }
  return best;
}

namespace {

// Backtracking state for the vertex-injection half of `embeds`. Once all
// vertices of F are placed, the shadow half is a table CSP: one variable
// per shadow set of F with domain the image class's vertex positions, one
// constraint per edge of F whose rows are the image constituent's edges.
struct EmbedSearch {
  const ReducedKGraph& a;
  const KGraph& f;
  NameIndex names;
  std::vector<std::vector<int>> shadow_sets;       // lex order
  std::map<std::vector<int>, int> shadow_pos;      // set -> variable id
  std::vector<std::vector<int>> vertex_order;      // filled below
  std::vector<int> order;                          // vertices, decreasing degree
  std::vector<int> phi;                            // vertex -> index element
  std::vector<char> used;                          // index position used
  std::vector<std::vector<int>> edges_closed_by;   // per order position
  std::optional<ReducedMap> found;

  EmbedSearch(const ReducedKGraph& a_in, const KGraph& f_in)
      : a(a_in), f(f_in), names(build_name_index(a_in)) {
    shadow_sets = shadow(f);
    for (std::size_t i = 0; i < shadow_sets.size(); ++i) {
      shadow_pos.emplace(shadow_sets[i], static_cast<int>(i));
    }
    std::vector<int> degree(static_cast<std::size_t>(f.n), 0);
    for (const auto& e : f.edges) {
      for (int v : e) ++degree[static_cast<std::size_t>(v)];
    }
    order.resize(static_cast<std::size_t>(f.n));
    for (int v = 0; v < f.n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
      return degree[static_cast<std::size_t>(u)] >
             degree[static_cast<std::size_t>(v)];
    });
    // Edge ids become checkable at the order position of their last vertex.
    std::vector<int> position(static_cast<std::size_t>(f.n));
    for (std::size_t i = 0; i < order.size(); ++i) {
      position[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    }
    edges_closed_by.resize(order.size());
    for (std::size_t e = 0; e < f.edges.size(); ++e) {
      int last = 0;
      for (int v : f.edges[e]) {
        last = std::max(last, position[static_cast<std::size_t>(v)]);
      }
      edges_closed_by[static_cast<std::size_t>(last)].push_back(
          static_cast<int>(e));
    }
    phi.assign(static_cast<std::size_t>(f.n), -1);
    used.assign(a.index_set.size(), 0);
  }

  bool constituent_nonempty(const std::vector<int>& edge) const {
    std::vector<int> Y;
    Y.reserve(edge.size());
    for (int v : edge) Y.push_back(phi[static_cast<std::size_t>(v)]);
    std::sort(Y.begin(), Y.end());
    return !a.constituents.at(Y).empty();
  }

  // Solves the shadow-coloring CSP for the current complete phi.
  bool try_psi() {
    const int num_vars = static_cast<int>(shadow_sets.size());
    std::vector<std::vector<int>> domains(
        static_cast<std::size_t>(num_vars));
    for (int i = 0; i < num_vars; ++i) {
      std::vector<int> X;
      for (int v : shadow_sets[static_cast<std::size_t>(i)]) {
        X.push_back(phi[static_cast<std::size_t>(v)]);
      }
      std::sort(X.begin(), X.end());
      const int size = static_cast<int>(a.classes.at(X).size());
      auto& dom = domains[static_cast<std::size_t>(i)];
      dom.resize(static_cast<std::size_t>(size));
      for (int val = 0; val < size; ++val) {
        dom[static_cast<std::size_t>(val)] = val;
      }
    }

    std::vector<std::vector<std::vector<int>>> row_storage;
    row_storage.reserve(f.edges.size());
    std::vector<TableConstraint> constraints;
    for (const auto& e : f.edges) {
      std::vector<int> Y;
      Y.reserve(e.size());
      for (int v : e) Y.push_back(phi[static_cast<std::size_t>(v)]);
      std::sort(Y.begin(), Y.end());

      TableConstraint c;
      std::vector<std::vector<int>> scope_classes;
      for (std::size_t j = 0; j < e.size(); ++j) {
        std::vector<int> S = e;
        S.erase(S.begin() + static_cast<std::ptrdiff_t>(j));
        c.vars.push_back(shadow_pos.at(S));
        std::vector<int> X;
        for (int v : S) X.push_back(phi[static_cast<std::size_t>(v)]);
        std::sort(X.begin(), X.end());
        scope_classes.push_back(std::move(X));
      }

      std::vector<std::vector<int>> rows;
      for (const auto& cedge : a.constituents.at(Y)) {
        std::vector<int> row(e.size(), -1);
        for (const auto& name : cedge) {
          const auto& [X, pos] = names.at(name);
          for (std::size_t j = 0; j < scope_classes.size(); ++j) {
            if (scope_classes[j] == X) row[j] = pos;
          }
        }
        rows.push_back(std::move(row));
      }
      row_storage.push_back(std::move(rows));
      c.rows = &row_storage.back();
      constraints.push_back(std::move(c));
    }

    std::vector<int> var_order(static_cast<std::size_t>(num_vars));
    for (int i = 0; i < num_vars; ++i) {
      var_order[static_cast<std::size_t>(i)] = i;
    }
    const CspResult res =
        solve_table_csp(num_vars, domains, constraints, var_order);
    if (res.status != CspStatus::witness) return false;

    ReducedMap map;
    map.phi = phi;
    for (int i = 0; i < num_vars; ++i) {
      std::vector<int> X;
      for (int v : shadow_sets[static_cast<std::size_t>(i)]) {
        X.push_back(phi[static_cast<std::size_t>(v)]);
      }
      std::sort(X.begin(), X.end());
      map.psi.emplace(
          shadow_sets[static_cast<std::size_t>(i)],
          a.classes.at(X)[static_cast<std::size_t>(
              res.assignment[static_cast<std::size_t>(i)])]);
    }
    found = std::move(map);
    return true;
  }

  bool place(std::size_t depth) {
    if (depth == order.size()) return try_psi();
    const int v = order[depth];
    for (std::size_t pos = 0; pos < a.index_set.size(); ++pos) {
      if (used[pos]) continue;
      used[pos] = 1;
      phi[static_cast<std::size_t>(v)] = a.index_set[pos];
      bool ok = true;
      for (int e : edges_closed_by[depth]) {
        if (!constituent_nonempty(f.edges[static_cast<std::size_t>(e)])) {
          ok = false;
          break;
        }
      }
      if (ok && place(depth + 1)) return true;
      phi[static_cast<std::size_t>(v)] = -1;
      used[pos] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<ReducedMap> embeds(const ReducedKGraph& a, const KGraph& f) {
  a.validate();
  f.validate();
  if (f.k != a.k) {
    throw InputError("embeds: graph arity " + std::to_string(f.k) +
                     " does not match reduced graph arity " +
                     std::to_string(a.k));
  }
  if (f.n > static_cast<int>(a.index_set.size())) return std::nullopt;
  EmbedSearch search(a, f);
  search.place(0);
  return search.found;
}

bool check_reduced_map(const ReducedKGraph& a, const KGraph& f,
                       const ReducedMap& m) {
  if (static_cast<int>(m.phi.size()) != f.n) return false;
  std::set<int> images;
  for (int value : m.phi) {
    if (!std::binary_search(a.index_set.begin(), a.index_set.end(), value)) {
      return false;
    }
    if (!images.insert(value).second) return false;
  }

  const NameIndex names = build_name_index(a);
  const auto shadow_sets = shadow(f);
  if (m.psi.size() != shadow_sets.size()) return false;
  for (const auto& S : shadow_sets) {
    const auto it = m.psi.find(S);
    if (it == m.psi.end()) return false;
    const auto found = names.find(it->second);
    if (found == names.end()) return false;
    std::vector<int> X;
    for (int v : S) X.push_back(m.phi[static_cast<std::size_t>(v)]);
    std::sort(X.begin(), X.end());
    if (found->second.first != X) return false;
  }

  for (const auto& e : f.edges) {
    std::vector<int> Y;
    for (int v : e) Y.push_back(m.phi[static_cast<std::size_t>(v)]);
    std::sort(Y.begin(), Y.end());
    std::vector<std::string> image;
    for (std::size_t j = 0; j < e.size(); ++j) {
      std::vector<int> S = e;
      S.erase(S.begin() + static_cast<std::ptrdiff_t>(j));
      image.push_back(m.psi.at(S));
    }
    std::sort(image.begin(), image.end());
    const auto& edges = a.constituents.at(Y);
    if (std::find(edges.begin(), edges.end(), image) == edges.end()) {
      return false;
    }
  }
  return true;
}

std::map<std::vector<int>, Rational> induced_density(
    const MultisetSelection& sel, const ReducedKGraph& a) {
  if (sel.s < 1) throw InputError("induced_density: s must be at least 1");
  const NameIndex names = build_name_index(a);
  std::map<std::vector<int>, std::map<std::string, int>> mult;
  for (const auto& [X, picks] : sel.selections) {
    if (static_cast<int>(picks.size()) != sel.s) {
      throw InputError("induced_density: class " + join_key(X) + " has " +
                       std::to_string(picks.size()) + " picks, expected " +
                       std::to_string(sel.s));
    }
    auto& m = mult[X];
    for (const auto& name : picks) {
      const auto found = names.find(name);
      if (found == names.end() || found->second.first != X) {
        throw InputError("induced_density: pick '" + name +
                         "' is not a vertex of class " + join_key(X));
      }
      ++m[name];
    }
  }

  const BigInt denom = ipow(sel.s, static_cast<unsigned>(a.k));
  std::map<std::vector<int>, Rational> result;
  for (const auto& Y : subsets_of(sel.M, a.k)) {
    BigInt count = 0;
    for (const auto& edge : a.constituents.at(Y)) {
      BigInt term = 1;
      for (const auto& name : edge) {
        const auto& X = names.at(name).first;
        const auto it = mult.find(X);
        if (it == mult.end()) {
          throw InputError("induced_density: no selection for class " +
                           join_key(X));
        }
        const auto mit = it->second.find(name);
        term *= (mit == it->second.end()) ? 0 : mit->second;
        if (term == 0) break;
      }
      count += term;
    }
    result.emplace(Y, Rational(count, denom));
  }
  return result;
}

namespace {

Rational min_density(const std::map<std::vector<int>, Rational>& densities) {
  Rational best = 1;
  bool first = true;
  for (const auto& [Y, d] : densities) {
    if (first || d < best) {
      best = d;
      first = false;
    }
  }
  return best;
}

}  // namespace

ContractResult contract(const ReducedKGraph& a, int m, int s,
                        const Rational& epsilon, uint64_t seed,
                        uint64_t budget) {
  a.validate();
  if (m < a.k || m > static_cast<int>(a.index_set.size())) {
    throw InputError("contract: m must be between k and the index set size");
  }
  if (s < 1) throw InputError("contract: s must be at least 1");
  if (epsilon < 0) throw InputError("contract: epsilon must be nonnegative");
  const BigInt total_picks = binomial(m, a.k - 1) * s;
  if (total_picks > 1'000'000) {
    throw InfeasibleError("contract: selection would hold " +
                          total_picks.str() + " picks (limit 1000000)");
  }

  ContractResult result;
  result.target = min_constituent_density(a) - epsilon;
  if (result.target < 0) result.target = 0;

  CounterRng rng(seed);
  bool have_best = false;

  while (result.evaluations < budget) {
    ++result.restarts;
    // Random m-subset of the index set.
    std::vector<int> pool = a.index_set;
    rng.shuffle(pool);
    pool.resize(static_cast<std::size_t>(m));
    std::sort(pool.begin(), pool.end());

    MultisetSelection sel;
    sel.s = s;
    sel.M = pool;
    for (const auto& X : subsets_of(pool, a.k - 1)) {
      const auto& names = a.classes.at(X);
      std::vector<std::string> picks;
      picks.reserve(static_cast<std::size_t>(s));
      for (int t = 0; t < s; ++t) {
        picks.push_back(names[static_cast<std::size_t>(
            rng.next_below(names.size()))]);
      }
      sel.selections.emplace(X, std::move(picks));
    }

    ++result.evaluations;
    auto densities = induced_density(sel, a);
    Rational current = min_density(densities);
    if (!have_best || current > result.achieved_min) {
      result.achieved_min = current;
      result.selection = sel;
      have_best = true;
    }

    // Greedy repair: replace one pick at a time, keeping the change that
    // most improves the minimum induced density, until no change helps.
    while (current < result.target && result.evaluations < budget) {
      // Locate the worst constituent (lex-first among ties).
      std::vector<int> worst_Y;
      for (const auto& [Y, d] : densities) {
        if (d == current) {
          worst_Y = Y;
          break;
        }
      }

      Rational best_min = current;
      std::vector<int> best_X;
      int best_slot = -1;
      std::string best_name;
      bool improved = false;

      for (std::size_t j = 0; j < worst_Y.size() && result.evaluations < budget;
           ++j) {
        std::vector<int> X = worst_Y;
        X.erase(X.begin() + static_cast<std::ptrdiff_t>(j));
        auto& picks = sel.selections.at(X);
        const auto& names = a.classes.at(X);
        for (int slot = 0; slot < s && result.evaluations < budget; ++slot) {
          const std::string original = picks[static_cast<std::size_t>(slot)];
          for (const auto& candidate : names) {
            if (candidate == original) continue;
            if (result.evaluations >= budget) break;
            picks[static_cast<std::size_t>(slot)] = candidate;
            ++result.evaluations;
            const auto trial = induced_density(sel, a);
            const Rational trial_min = min_density(trial);
            if (trial_min > best_min) {
              best_min = trial_min;
              best_X = X;
              best_slot = slot;
              best_name = candidate;
              improved = true;
            }
          }
          picks[static_cast<std::size_t>(slot)] = original;
        }
      }

      if (!improved) break;
      sel.selections.at(best_X)[static_cast<std::size_t>(best_slot)] =
          best_name;
      densities = induced_density(sel, a);
      current = min_density(densities);
      if (current > result.achieved_min) {
        result.achieved_min = current;
        result.selection = sel;
      }
    }

    if (current >= result.target) {
      // Independent recount before reporting success.
      const auto recount = induced_density(sel, a);
      const Rational verified = min_density(recount);
      if (verified >= result.target) {
        result.found = true;
        result.selection = sel;
        result.achieved_min = verified;
        return result;
      }
    }
  }
  return result;
}

}  // namespace palcheck
