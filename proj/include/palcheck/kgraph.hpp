#pragma once

// k-uniform hypergraphs on vertices 0..n-1. Edges are stored as sorted
// k-sets, the edge list lexicographically sorted and deduplicated.

#include <optional>
#include <vector>

namespace palcheck {

struct KGraph {
  int n = 0;
  int k = 0;
  std::vector<std::vector<int>> edges;

  void canonicalize();       // sort within edges, then sort/dedupe the list
  void validate() const;     // throws InputError
  bool has_edge(const std::vector<int>& e) const;  // e must be sorted

  bool operator==(const KGraph&) const = default;
};

// Complete k-graph on n vertices.
KGraph complete_kgraph(int n, int k);

// All (k-1)-subsets of edges (the shadow), sorted lexicographically.
std::vector<std::vector<int>> shadow(const KGraph& g);

// All vertex permutations mapping edges onto edges, as image vectors
// perm[v] = image of v. Brute force; requires n <= 9.
std::vector<std::vector<int>> automorphisms(const KGraph& g);

// Injective map phi: V(pattern) -> V(host) with every pattern edge mapped
// to a host edge (a not-necessarily-induced copy). Returns phi or nullopt.
std::optional<std::vector<int>> contains_copy(const KGraph& host,
                                              const KGraph& pattern);

// Reference oracle: tries all injections in lexicographic order.
std::optional<std::vector<int>> contains_copy_naive(const KGraph& host,
                                                    const KGraph& pattern);

}  // namespace palcheck
