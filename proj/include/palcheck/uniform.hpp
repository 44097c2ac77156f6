#pragma once

// Uniform-density checking for k-graphs relative to (k-2)-uniform test
// graphs: a k-graph H is (d, mu)-dense when for every (k-2)-graph G the
// number of H-edges spanning a k-clique of G is at least
// d * (number of k-cliques of G) - mu * n^k. Also houses the seeded
// sampler that draws a k-graph from a palette by coloring all (k-1)-sets
// uniformly at random, together with a freeness spot check.

#include <cstdint>
#include <string>
#include <vector>

#include "palcheck/colorability.hpp"
#include "palcheck/kgraph.hpp"
#include "palcheck/palette.hpp"
#include "palcheck/rational.hpp"

namespace palcheck {

// j-uniform test graphs, 1 <= j; for j = 1 the edges are singletons.
struct JGraph {
  int n = 0;
  int j = 0;
  std::vector<std::vector<int>> edges;

  void canonicalize();    // sort within edges, sort/dedupe the list
  void validate() const;  // throws InputError
  bool has_edge(const std::vector<int>& e) const;  // e must be sorted

  bool operator==(const JGraph&) const = default;
};

JGraph complete_jgraph(int n, int j);

// All k-subsets of [n] whose every j-subset is an edge of g, in lex
// order. Requires g.j < k <= g.n.
std::vector<std::vector<int>> cliques(const JGraph& g, int k);

// Reference oracle: filters all k-subsets. Requires n <= 12.
std::vector<std::vector<int>> cliques_naive(const JGraph& g, int k);

struct SampledHypergraph {
  KGraph graph;             // on vertices 0..n-1 with the natural order
  ShadowColoring coloring;  // the sampled map on ALL (k-1)-subsets of [n]
};

// Colors every (k-1)-subset of [n] (lex order, one draw each) uniformly
// at random and keeps exactly the k-sets whose induced color tuple is
// admissible. The sample is its own colorability witness under the
// natural order 0 < 1 < ... < n-1.
SampledHypergraph sample_hypergraph(const Palette& p, int n, uint64_t seed);

enum class DensityMode { exhaustive, sampled, adversarial };

struct DensityViolation {
  JGraph test_graph;
  BigInt clique_count = 0;  // k-cliques of the test graph
  BigInt edge_count = 0;    // of those, how many are edges of h
  Rational slack = 0;       // edge_count - d*clique_count + mu*n^k (< 0)
};

struct DensityReport {
  DensityMode mode = DensityMode::exhaustive;
  Rational d = 0;
  Rational mu = 0;
  bool ok = true;           // no violations found
  bool exhaustive = false;  // all test graphs were enumerated
  uint64_t checked = 0;     // test graphs evaluated
  std::vector<DensityViolation> violations;  // sorted by slack, then lex
  std::string confidence_note;  // sampled mode only; informational
};

// Independent recount of one test graph's slack (used by validators).
Rational density_slack(const KGraph& h, const JGraph& g, const Rational& d,
                       const Rational& mu);

// Checks the density inequality over (k-2)-graphs on h's vertex set.
//  - exhaustive: all 2^C(n,k-2) test graphs; refuses (InfeasibleError,
//    message stating the required count) when that exceeds `budget`.
//    An empty violation list is a proof for this h.
//  - sampled: `budget` random test graphs (each possible edge kept with
//    probability 1/2); the report carries a Hoeffding-style note.
//  - adversarial: hill-climbing on single-edge flips with random
//    restarts, spending `budget` slack evaluations; finds violations
//    but never certifies density.
DensityReport check_uniform_density(const KGraph& h, const Rational& d,
                                    const Rational& mu, DensityMode mode,
                                    uint64_t seed, uint64_t budget);

struct FreenessReport {
  int trials = 0;
  bool pass = true;
  int violating_trial = -1;   // when pass is false
  int violating_member = -1;  // index into the forbidden list
};

// Precondition (checked first, InputError on failure): every forbidden
// graph is NOT p-colorable. Then samples `trials` hypergraphs at size n
// and asserts none contains a copy of any forbidden member; a hit would
// contradict the construction and is reported as a failure.
FreenessReport freeness_spot_check(const Palette& p,
                                   const std::vector<KGraph>& forbidden,
                                   int n, int trials, uint64_t seed);

}  // namespace palcheck
