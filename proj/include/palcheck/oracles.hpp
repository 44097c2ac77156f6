#pragma once

// Brute-force extremal oracles used to cross-check the digraph lemmas
// behind the certificate pipeline, plus the exact longest-monotone-
// subsequence utility. All searches are exhaustive (with monotone
// pruning) and report the lexicographically smallest maximizer.

#include <utility>
#include <vector>

#include "palcheck/digraph.hpp"
#include "palcheck/rational.hpp"

namespace palcheck {

struct ArcOracleResult {
  int max_arcs = 0;
  Digraph extremal;       // lex-smallest arc set among maximizers
  uint64_t nodes = 0;     // search-tree nodes visited (both passes)
  Rational bound = 0;     // the closed-form upper bound that was asserted
};

// Maximum arc count of a loopless digraph on n vertices containing no
// transitive tournament on r+1 vertices. Asserts the (r-1)/r * n^2
// bound. Exhaustive for n <= 5 (InfeasibleError above).
ArcOracleResult oracle_max_arcs_no_TT(int n, int r);

// Maximum arc count of a digraph on n vertices with no directed walk of
// length r (walks may repeat vertices, so cycles and loops are excluded
// for every r >= 1). Asserts the (r-1)/(2r) * n^2 bound and re-derives
// the extremal digraph from its walk-level decomposition. Requires
// 1 <= r < n <= 5.
ArcOracleResult oracle_max_arcs_no_walk(int n, int r);

// Level function of a digraph without length-r walks: level[v] is the
// length of the longest directed walk ending at v. Every arc strictly
// increases the level. Throws InputError when the digraph has a cycle
// (levels are then unbounded).
std::vector<int> walk_levels(const Digraph& d);

// Exact lengths of the longest strictly increasing and strictly
// decreasing subsequences. Entries must be pairwise distinct (InputError
// otherwise). Also self-checks the guarantee that any sequence of length
// at least (a-1)(b-1)+1 has an increasing subsequence of length a or a
// decreasing one of length b.
std::pair<int, int> longest_monotone(const std::vector<Rational>& seq);

}  // namespace palcheck
