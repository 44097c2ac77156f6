#pragma once

// Reduced k-graphs: an index set I, one disjoint vertex class per
// (k-1)-subset of I, and per k-subset Y a k-partite constituent whose
// edges take exactly one vertex from each class inside Y. Includes the
// canonical construction from a palette, density checking, reduced-map
// embedding of k-graphs, and a randomized density-preserving contraction.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "palcheck/kgraph.hpp"
#include "palcheck/palette.hpp"
#include "palcheck/rational.hpp"

namespace palcheck {

struct ReducedKGraph {
  int k = 0;
  std::vector<int> index_set;  // sorted, distinct
  // Class key = the sorted (k-1)-subset; vertex names are unique across
  // all classes (namespaced by the key when built from a palette).
  std::map<std::vector<int>, std::vector<std::string>> classes;
  // Constituent key = the sorted k-subset; each edge lists one vertex per
  // class, the names sorted within the edge; edge lists sorted + deduped.
  std::map<std::vector<int>, std::vector<std::vector<std::string>>>
      constituents;

  void canonicalize();
  void validate() const;  // throws InputError

  // Class key containing a vertex name; throws InputError when unknown.
  const std::vector<int>& class_of(const std::string& vertex) const;
};

// All sorted r-subsets of `base` (which must be sorted), in lex order.
std::vector<std::vector<int>> subsets_of(const std::vector<int>& base, int r);

// The canonical reduced graph of a palette on index set {1..m}: every
// class is a labeled copy of the color set, and for Y with elements
// i_1 < ... < i_k every admissible tuple (c_1,...,c_k) contributes the
// edge putting c_j's copy in the class at Y minus i_j.
ReducedKGraph from_palette(const Palette& p, int m);

struct DenseCheck {
  bool dense = true;
  std::vector<int> violating_Y;  // first violator in lex order
  Rational worst = 0;            // that constituent's density
};

// Exact check of |E(A_Y)| >= d * prod of class sizes for every Y.
DenseCheck is_d_dense(const ReducedKGraph& a, const Rational& d);

// Minimum constituent density over all Y (1 when there are no Y).
Rational min_constituent_density(const ReducedKGraph& a);

struct ReducedMap {
  std::vector<int> phi;  // phi[vertex of F] = element of a.index_set
  std::map<std::vector<int>, std::string> psi;  // shadow set -> vertex name
};

// Injective phi on vertices plus psi on the shadow such that every edge
// of f maps to a constituent edge. Definitive nullopt on exhaustion.
std::optional<ReducedMap> embeds(const ReducedKGraph& a, const KGraph& f);

// Independent validator for a claimed reduced map.
bool check_reduced_map(const ReducedKGraph& a, const KGraph& f,
                       const ReducedMap& m);

struct MultisetSelection {
  int s = 0;                    // multiset size per class
  std::vector<int> M;           // chosen sub-index-set, sorted
  // For each (k-1)-subset X of M: exactly s picks (repeats allowed).
  std::map<std::vector<int>, std::vector<std::string>> selections;
};

// Density of each constituent induced on the labeled multiset copies:
// edge count weighted by pick multiplicities, divided by s^k.
std::map<std::vector<int>, Rational> induced_density(
    const MultisetSelection& sel, const ReducedKGraph& a);

struct ContractResult {
  bool found = false;
  MultisetSelection selection;
  Rational target = 0;       // required density d - epsilon
  Rational achieved_min = 0; // worst induced constituent density
  uint64_t evaluations = 0;  // candidate evaluations spent
  int restarts = 0;
};

// Searches (seeded restarts + greedy single-pick repair) for an m-subset
// of the index set and s picks per class whose induced constituents all
// have density >= min_constituent_density(a) - epsilon. The returned
// selection is re-validated with induced_density before being reported.
ContractResult contract(const ReducedKGraph& a, int m, int s,
                        const Rational& epsilon, uint64_t seed,
                        uint64_t budget);

}  // namespace palcheck
