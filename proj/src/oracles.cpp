#include "palcheck/oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "palcheck/errors.hpp"

namespace palcheck {

namespace {

// Exhaustive max-arc search over a fixed arc universe for a property
// that is monotone under arc addition ("bad" can never be repaired by
// adding arcs). Two passes: the first finds the maximum size, the second
// re-runs include-first and keeps the first maximizer it completes,
// which is the lexicographically smallest arc set of that size.
struct MaxArcSearch {
  const std::vector<std::pair<int, int>>& universe;
  const std::function<bool(const Digraph&)>& bad;
  int n;
  uint64_t nodes = 0;

  Digraph current;
  int best = -1;
  std::vector<std::pair<int, int>> best_arcs;
  bool extracting = false;

  MaxArcSearch(int n_in,
               const std::vector<std::pair<int, int>>& universe_in,
               const std::function<bool(const Digraph&)>& bad_in)
      : universe(universe_in), bad(bad_in), n(n_in) {
    current.n = n;
  }

  bool dfs(std::size_t index) {
    ++nodes;
    const int count = static_cast<int>(current.arcs.size());
    const int remaining = static_cast<int>(universe.size() - index);
    if (extracting) {
      if (count + remaining < best) return false;
    } else if (count + remaining <= best) {
      return false;
    }
    if (index == universe.size()) {
      if (extracting) {
        if (count == best) {
          best_arcs = current.arcs;
          return true;
        }
        return false;
      }
      best = std::max(best, count);
      return false;
    }
    // Include first: arcs are added in ascending order, so current.arcs
    // stays sorted and the first completed maximizer is lex-least.
    current.arcs.push_back(universe[index]);
    if (!bad(current)) {
      if (dfs(index + 1)) return true;
    }
    current.arcs.pop_back();
    return dfs(index + 1);
  }

  void run() {
    extracting = false;
    dfs(0);
    extracting = true;
    dfs(0);
  }
};

ArcOracleResult run_search(int n,
                           const std::vector<std::pair<int, int>>& universe,
                           const std::function<bool(const Digraph&)>& bad,
                           const Rational& bound) {
  MaxArcSearch search(n, universe, bad);
  search.run();
  ArcOracleResult result;
  result.max_arcs = search.best;
  result.extremal.n = n;
  result.extremal.arcs = search.best_arcs;
  result.nodes = search.nodes;
  result.bound = bound;
  if (Rational(result.max_arcs) > bound) {
    throw std::logic_error(
        "arc oracle: enumeration exceeded the closed-form bound");
  }
  return result;
}

std::vector<std::pair<int, int>> loopless_universe(int n) {
  std::vector<std::pair<int, int>> arcs;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) arcs.emplace_back(u, v);
    }
  }
  return arcs;
}

}  // namespace

ArcOracleResult oracle_max_arcs_no_TT(int n, int r) {
  if (n < 1 || r < 1) {
    throw InputError("oracle_max_arcs_no_TT: need n >= 1 and r >= 1");
  }
  if (n > 5) {
    throw InfeasibleError(
        "oracle_max_arcs_no_TT: exhaustive search supports n <= 5, got " +
        std::to_string(n));
  }
  const std::function<bool(const Digraph&)> bad = [&](const Digraph& d) {
    return contains_transitive_tournament(d, r + 1);
  };
  return run_search(n, loopless_universe(n), bad,
                    Rational(r - 1, r) * Rational(n) * Rational(n));
}

ArcOracleResult oracle_max_arcs_no_walk(int n, int r) {
  if (r < 1 || n <= r) {
    throw InputError("oracle_max_arcs_no_walk: need 1 <= r < n");
  }
  if (n > 5) {
    throw InfeasibleError(
        "oracle_max_arcs_no_walk: exhaustive search supports n <= 5, got " +
        std::to_string(n));
  }
  const std::function<bool(const Digraph&)> bad = [&](const Digraph& d) {
    return longest_walk(d, r) >= r;
  };
  auto result = run_search(n, loopless_universe(n), bad,
                           Rational(r - 1, 2 * r) * Rational(n) * Rational(n));

  // Cross-check: the walk-level decomposition must reconstruct the
  // extremal digraph as a strictly level-increasing DAG with fewer than
  // r levels used.
  const auto levels = walk_levels(result.extremal);
  for (const auto& [u, v] : result.extremal.arcs) {
    if (levels[static_cast<std::size_t>(u)] >=
        levels[static_cast<std::size_t>(v)]) {
      throw std::logic_error(
          "oracle_max_arcs_no_walk: level function does not increase "
          "along an arc of the extremal digraph");
    }
  }
  for (const int level : levels) {
    if (level < 0 || level >= r) {
      throw std::logic_error(
          "oracle_max_arcs_no_walk: extremal digraph has a walk level "
          "outside [0, r)");
    }
  }
  return result;
}

std::vector<int> walk_levels(const Digraph& d) {
  // Longest walk ending at each vertex via iterated relaxation; in an
  // acyclic digraph the values stabilize after at most n rounds. A value
  // reaching n would certify a cycle.
  std::vector<int> level(static_cast<std::size_t>(d.n), 0);
  for (int round = 0; round < d.n + 1; ++round) {
    bool changed = false;
    for (const auto& [u, v] : d.arcs) {
      const int candidate = level[static_cast<std::size_t>(u)] + 1;
      if (candidate > level[static_cast<std::size_t>(v)]) {
        level[static_cast<std::size_t>(v)] = candidate;
        changed = true;
      }
    }
    if (!changed) return level;
  }
  throw InputError("walk_levels: digraph has a directed cycle");
}

std::pair<int, int> longest_monotone(const std::vector<Rational>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) {
        throw InputError("longest_monotone: entries must be distinct");
      }
    }
  }

  // Patience sorting: tails[i] is the least possible last element of an
  // increasing subsequence of length i+1.
  const auto lis = [](const std::vector<Rational>& s) {
    std::vector<Rational> tails;
    for (const auto& x : s) {
      const auto it = std::lower_bound(tails.begin(), tails.end(), x);
      if (it == tails.end()) {
        tails.push_back(x);
      } else {
        *it = x;
      }
    }
    return static_cast<int>(tails.size());
  };

  std::vector<Rational> negated;
  negated.reserve(seq.size());
  for (const auto& x : seq) negated.push_back(-x);
  const int inc = lis(seq);
  const int dec = lis(negated);

  // Self-check of the guarantee: length (a-1)(b-1)+1 forces inc >= a or
  // dec >= b. (Cheap tripwire; a failure would mean a solver bug.)
  const int len = static_cast<int>(seq.size());
  for (int a = 1; a <= len; ++a) {
    for (int b = 1; b <= len; ++b) {
      if ((a - 1) * (b - 1) + 1 <= len && inc < a && dec < b) {
        throw std::logic_error(
            "longest_monotone: monotone-subsequence guarantee violated");
      }
    }
  }
  return {inc, dec};
}

}  // namespace palcheck
