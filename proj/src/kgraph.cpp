#include "palcheck/kgraph.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "palcheck/errors.hpp"

namespace palcheck {

void KGraph::canonicalize() {
  for (auto& e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

void KGraph::validate() const {
  if (k < 2) throw InputError("kgraph: k must be at least 2");
  if (n < 0) throw InputError("kgraph: negative vertex count");
  for (size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (static_cast<int>(e.size()) != k) {
      throw InputError("kgraph: edge " + std::to_string(i) +
                       " does not have k vertices");
    }
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] < 0 || e[j] >= n) {
        throw InputError("kgraph: edge " + std::to_string(i) +
                         " has a vertex out of range");
      }
      if (j > 0 && e[j - 1] >= e[j]) {
        throw InputError("kgraph: edge " + std::to_string(i) +
                         " is not a sorted set of distinct vertices");
      }
    }
    if (i > 0 && !(edges[i - 1] < edges[i])) {
      throw InputError("kgraph: edges not sorted/deduplicated (index " +
                       std::to_string(i) + ")");
    }
  }
}

bool KGraph::has_edge(const std::vector<int>& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

KGraph complete_kgraph(int n, int k) {
  KGraph g;
  g.n = n;
  g.k = k;
  if (k <= n) {
    std::vector<int> pick(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
    for (;;) {
      g.edges.push_back(pick);
      int pos = k - 1;
      while (pos >= 0 && pick[static_cast<size_t>(pos)] == n - k + pos) --pos;
      if (pos < 0) break;
      ++pick[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < k; ++i) {
        pick[static_cast<size_t>(i)] = pick[static_cast<size_t>(i - 1)] + 1;
      }
    }
  }
  g.validate();
  return g;
}

std::vector<std::vector<int>> shadow(const KGraph& g) {
  std::set<std::vector<int>> acc;
  for (const auto& e : g.edges) {
    for (size_t drop = 0; drop < e.size(); ++drop) {
      std::vector<int> s;
      s.reserve(e.size() - 1);
      for (size_t j = 0; j < e.size(); ++j) {
        if (j != drop) s.push_back(e[j]);
      }
      acc.insert(std::move(s));
    }
  }
  return std::vector<std::vector<int>>(acc.begin(), acc.end());
}

std::vector<std::vector<int>> automorphisms(const KGraph& g) {
  g.validate();
  if (g.n > 9) {
    throw InfeasibleError("automorphisms: n > 9 enumeration refused");
  }
  std::vector<int> perm(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) perm[static_cast<size_t>(v)] = v;
  std::vector<std::vector<int>> out;
  std::vector<int> image;
  do {
    bool ok = true;
    for (const auto& e : g.edges) {
      image.clear();
      for (const int v : e) image.push_back(perm[static_cast<size_t>(v)]);
      std::sort(image.begin(), image.end());
      if (!g.has_edge(image)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

bool extend_copy(const KGraph& host, const KGraph& pattern,
                 const std::vector<int>& order, size_t pos,
                 std::vector<int>& phi, std::vector<bool>& used) {
  if (pos == order.size()) return true;
  const int pv = order[pos];
  for (int hv = 0; hv < host.n; ++hv) {
    if (used[static_cast<size_t>(hv)]) continue;
    phi[static_cast<size_t>(pv)] = hv;
    // Check every pattern edge that is now fully mapped.
    bool ok = true;
    std::vector<int> image;
    for (const auto& e : pattern.edges) {
      bool full = true;
      bool touches = false;
      for (const int v : e) {
        if (v == pv) touches = true;
        if (phi[static_cast<size_t>(v)] < 0) {
          full = false;
          break;
        }
      }
      if (!full || !touches) continue;
      image.clear();
      for (const int v : e) image.push_back(phi[static_cast<size_t>(v)]);
      std::sort(image.begin(), image.end());
      if (!host.has_edge(image)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      used[static_cast<size_t>(hv)] = true;
      if (extend_copy(host, pattern, order, pos + 1, phi, used)) return true;
      used[static_cast<size_t>(hv)] = false;
    }
    phi[static_cast<size_t>(pv)] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> contains_copy(const KGraph& host,
                                              const KGraph& pattern) {
  host.validate();
  pattern.validate();
  if (host.k != pattern.k) throw InputError("contains_copy: arity mismatch");
  if (pattern.n > host.n) return std::nullopt;

  // Map high-degree pattern vertices first.
  std::vector<int> degree(static_cast<size_t>(pattern.n), 0);
  for (const auto& e : pattern.edges) {
    for (const int v : e) ++degree[static_cast<size_t>(v)];
  }
  std::vector<int> order(static_cast<size_t>(pattern.n));
  for (int v = 0; v < pattern.n; ++v) order[static_cast<size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return degree[static_cast<size_t>(a)] > degree[static_cast<size_t>(b)];
  });

  std::vector<int> phi(static_cast<size_t>(pattern.n), -1);
  std::vector<bool> used(static_cast<size_t>(host.n), false);
  if (extend_copy(host, pattern, order, 0, phi, used)) return phi;
  return std::nullopt;
}

std::optional<std::vector<int>> contains_copy_naive(const KGraph& host,
                                                    const KGraph& pattern) {
  host.validate();
  pattern.validate();
  if (host.k != pattern.k) {
    throw InputError("contains_copy_naive: arity mismatch");
  }
  if (pattern.n > host.n) return std::nullopt;
  // All injections in lexicographic order of the image vector.
  std::vector<int> phi(static_cast<size_t>(pattern.n), 0);
  std::vector<int> image;
  for (;;) {
    bool injective = true;
    for (int a = 0; a < pattern.n && injective; ++a) {
      for (int b = a + 1; b < pattern.n; ++b) {
        if (phi[static_cast<size_t>(a)] == phi[static_cast<size_t>(b)]) {
          injective = false;
          break;
        }
      }
    }
    if (injective) {
      bool ok = true;
      for (const auto& e : pattern.edges) {
        image.clear();
        for (const int v : e) image.push_back(phi[static_cast<size_t>(v)]);
        std::sort(image.begin(), image.end());
        if (!host.has_edge(image)) {
          ok = false;
          break;
        }
      }
      if (ok) return phi;
    }
    int pos = pattern.n - 1;
    while (pos >= 0 && phi[static_cast<size_t>(pos)] == host.n - 1) {
      phi[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return std::nullopt;
    ++phi[static_cast<size_t>(pos)];
  }
}

}  // namespace palcheck
