#include "palcheck/uniform.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>
#include <string>

#include "palcheck/errors.hpp"
#include "palcheck/kgraph.hpp"
#include "palcheck/reduced.hpp"
#include "palcheck/rng.hpp"

namespace palcheck {

void JGraph::canonicalize() {
  for (auto& e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

void JGraph::validate() const {
  if (j < 1) throw InputError("jgraph: j must be at least 1");
  if (n < 0) throw InputError("jgraph: negative vertex count");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (static_cast<int>(e.size()) != j) {
      throw InputError("jgraph: edge " + std::to_string(i) +
                       " does not have j vertices");
    }
    for (std::size_t t = 0; t < e.size(); ++t) {
      if (e[t] < 0 || e[t] >= n) {
        throw InputError("jgraph: edge " + std::to_string(i) +
                         " has a vertex out of range");
      }
      if (t > 0 && e[t - 1] >= e[t]) {
        throw InputError("jgraph: edge " + std::to_string(i) +
                         " is not a sorted set of distinct vertices");
      }
    }
    if (i > 0 && !(edges[i - 1] < edges[i])) {
      throw InputError("jgraph: edges not sorted/deduplicated (index " +
                       std::to_string(i) + ")");
    }
  }
}

bool JGraph::has_edge(const std::vector<int>& e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

JGraph complete_jgraph(int n, int j) {
  JGraph g;
  g.n = n;
  g.j = j;
  std::vector<int> base(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) base[static_cast<std::size_t>(v)] = v;
  g.edges = subsets_of(base, j);
  g.validate();
  return g;
}

namespace {

// Extends sorted prefixes one vertex at a time; a new vertex v is
// admissible when every j-subset of the prefix completed by v is an edge.
void extend_cliques(const JGraph& g, int k, std::vector<int>& prefix,
                    int next, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == k) {
    out.push_back(prefix);
    return;
  }
  const int remaining = k - static_cast<int>(prefix.size());
  for (int v = next; v <= g.n - remaining; ++v) {
    bool ok = true;
    if (static_cast<int>(prefix.size()) >= g.j - 1) {
      for (const auto& part : subsets_of(prefix, g.j - 1)) {
        std::vector<int> candidate = part;
        candidate.push_back(v);  // v exceeds everything in the prefix
        if (!g.has_edge(candidate)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    prefix.push_back(v);
    extend_cliques(g, k, prefix, v + 1, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> cliques(const JGraph& g, int k) {
  g.validate();
  if (k <= g.j || k > g.n) {
    throw InputError("cliques: need j < k <= n, got j=" + std::to_string(g.j) +
                     ", k=" + std::to_string(k) + ", n=" + std::to_string(g.n));
  }
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  extend_cliques(g, k, prefix, 0, out);
  return out;
}

std::vector<std::vector<int>> cliques_naive(const JGraph& g, int k) {
  g.validate();
  if (k <= g.j || k > g.n) {
    throw InputError("cliques_naive: need j < k <= n");
  }
  if (g.n > 12) throw InfeasibleError("cliques_naive: n must be at most 12");
  std::vector<int> base(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) base[static_cast<std::size_t>(v)] = v;
  std::vector<std::vector<int>> out;
  for (const auto& candidate : subsets_of(base, k)) {
    bool ok = true;
    for (const auto& sub : subsets_of(candidate, g.j)) {
      if (!g.has_edge(sub)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(candidate);
  }
  return out;
}

SampledHypergraph sample_hypergraph(const Palette& p, int n, uint64_t seed) {
  p.validate();
  if (n < p.k) {
    throw InputError("sample_hypergraph: n must be at least k");
  }
  std::vector<int> base(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) base[static_cast<std::size_t>(v)] = v;

  SampledHypergraph out;
  out.coloring.sets = subsets_of(base, p.k - 1);
  out.coloring.colors.reserve(out.coloring.sets.size());
  CounterRng rng(seed);
  for (std::size_t i = 0; i < out.coloring.sets.size(); ++i) {
    out.coloring.colors.push_back(static_cast<int>(
        rng.next_below(static_cast<uint64_t>(p.num_colors))));
  }

  out.graph.n = n;
  out.graph.k = p.k;
  std::vector<int> tuple(static_cast<std::size_t>(p.k));
  std::vector<int> sub;
  for (const auto& e : subsets_of(base, p.k)) {
    for (int j = 0; j < p.k; ++j) {
      sub = e;
      sub.erase(sub.begin() + j);
      tuple[static_cast<std::size_t>(j)] = out.coloring.color_of(sub);
    }
    if (p.has_tuple(tuple)) out.graph.edges.push_back(e);
  }
  return out;
}

namespace {

// Shared slack arithmetic: slack = edges_in - d*cliques + mu*n^k.
Rational slack_value(const BigInt& edges_in, const BigInt& clique_count,
                     const Rational& d, const Rational& mu_term) {
  return Rational(edges_in) - d * Rational(clique_count) + mu_term;
}

// Evaluates test graphs given as inclusion flags over the universe of
// possible (k-2)-edges. For k = 3 the universe is the vertex set and a
// bitmask specialization counts cliques and covered edges directly.
struct SlackEvaluator {
  const KGraph& h;
  Rational d;
  Rational mu_term;  // mu * n^k, precomputed
  std::vector<std::vector<int>> universe;
  bool fast = false;
  std::vector<uint64_t> edge_masks;  // k = 3, n <= 63 only

  SlackEvaluator(const KGraph& h_in, const Rational& d_in,
                 const Rational& mu_in)
      : h(h_in), d(d_in) {
    mu_term = mu_in * Rational(ipow(h.n, static_cast<unsigned>(h.k)));
    std::vector<int> base(static_cast<std::size_t>(h.n));
    for (int v = 0; v < h.n; ++v) base[static_cast<std::size_t>(v)] = v;
    universe = subsets_of(base, h.k - 2);
    fast = (h.k == 3 && h.n <= 63);
    if (fast) {
      edge_masks.reserve(h.edges.size());
      for (const auto& e : h.edges) {
        uint64_t mask = 0;
        for (int v : e) mask |= uint64_t{1} << v;
        edge_masks.push_back(mask);
      }
    }
  }

  struct Eval {
    BigInt clique_count;
    BigInt edges_in;
    Rational slack;
  };

  Eval evaluate(const std::vector<char>& included) const {
    if (fast) {
      uint64_t mask = 0;
      for (std::size_t i = 0; i < included.size(); ++i) {
        if (included[i]) mask |= uint64_t{1} << universe[i][0];
      }
      const int s = std::popcount(mask);
      Eval out;
      out.clique_count = binomial(s, 3);
      int64_t covered = 0;
      for (const uint64_t em : edge_masks) {
        if ((em & mask) == em) ++covered;
      }
      out.edges_in = covered;
      out.slack = slack_value(out.edges_in, out.clique_count, d, mu_term);
      return out;
    }
    JGraph g = materialize(included);
    Eval out;
    const auto kk = cliques(g, h.k);
    out.clique_count = static_cast<int64_t>(kk.size());
    int64_t covered = 0;
    for (const auto& c : kk) {
      if (h.has_edge(c)) ++covered;
    }
    out.edges_in = covered;
    out.slack = slack_value(out.edges_in, out.clique_count, d, mu_term);
    return out;
  }

  JGraph materialize(const std::vector<char>& included) const {
    JGraph g;
    g.n = h.n;
    g.j = h.k - 2;
    for (std::size_t i = 0; i < included.size(); ++i) {
      if (included[i]) g.edges.push_back(universe[i]);
    }
    return g;
  }
};

void sort_violations(std::vector<DensityViolation>& violations) {
  std::sort(violations.begin(), violations.end(),
            [](const DensityViolation& a, const DensityViolation& b) {
              if (a.slack != b.slack) return a.slack < b.slack;
              return a.test_graph.edges < b.test_graph.edges;
            });
}

}  // namespace

Rational density_slack(const KGraph& h, const JGraph& g, const Rational& d,
                       const Rational& mu) {
  h.validate();
  g.validate();
  if (g.j != h.k - 2) {
    throw InputError("density_slack: test graph must be (k-2)-uniform");
  }
  if (g.n != h.n) {
    throw InputError("density_slack: vertex count mismatch");
  }
  const Rational mu_term = mu * Rational(ipow(h.n, static_cast<unsigned>(h.k)));
  const auto kk = cliques(g, h.k);
  BigInt covered = 0;
  for (const auto& c : kk) {
    if (h.has_edge(c)) ++covered;
  }
  return slack_value(covered, static_cast<int64_t>(kk.size()), d, mu_term);
}

DensityReport check_uniform_density(const KGraph& h, const Rational& d,
                                    const Rational& mu, DensityMode mode,
                                    uint64_t seed, uint64_t budget) {
  h.validate();
  if (h.k < 3) {
    throw InputError("check_uniform_density: k must be at least 3");
  }
  if (h.n < h.k) {
    throw InputError("check_uniform_density: n must be at least k");
  }
  if (d < 0 || d > 1) {
    throw InputError("check_uniform_density: d must lie in [0,1]");
  }
  if (mu < 0) {
    throw InputError("check_uniform_density: mu must be nonnegative");
  }

  const SlackEvaluator eval(h, d, mu);
  const std::size_t t = eval.universe.size();

  DensityReport report;
  report.mode = mode;
  report.d = d;
  report.mu = mu;

  std::set<std::vector<std::vector<int>>> seen;
  auto record = [&](const std::vector<char>& included,
                    const SlackEvaluator::Eval& e) {
    JGraph g = eval.materialize(included);
    if (!seen.insert(g.edges).second) return;
    // Independent recount before a violation is reported.
    if (density_slack(h, g, d, mu) != e.slack) {
      throw std::logic_error(
          "check_uniform_density: slack recount disagrees");
    }
    report.violations.push_back(
        DensityViolation{std::move(g), e.clique_count, e.edges_in, e.slack});
  };

  if (mode == DensityMode::exhaustive) {
    const BigInt required = ipow(2, static_cast<unsigned>(t));
    if (t >= 64 || required > budget) {
      throw InfeasibleError(
          "check_uniform_density: exhaustive mode needs " + required.str() +
          " test-graph evaluations, over the budget of " +
          std::to_string(budget));
    }
    std::vector<char> included(t, 0);
    const uint64_t total = uint64_t{1} << t;
    for (uint64_t mask = 0; mask < total; ++mask) {
      for (std::size_t i = 0; i < t; ++i) {
        included[i] = (mask >> i) & 1u ? 1 : 0;
      }
      const auto e = eval.evaluate(included);
      ++report.checked;
      if (e.slack < 0) record(included, e);
    }
    report.exhaustive = true;
  } else if (mode == DensityMode::sampled) {
    CounterRng rng(seed);
    std::vector<char> included(t, 0);
    for (uint64_t sample = 0; sample < budget; ++sample) {
      for (std::size_t i = 0; i < t; ++i) {
        included[i] = rng.next_below(2) ? 1 : 0;
      }
      const auto e = eval.evaluate(included);
      ++report.checked;
      if (e.slack < 0) record(included, e);
    }
    // Informational only: a two-sided Hoeffding bound on the violation
    // rate among uniformly random test graphs; display text, no verdict.
    if (report.checked > 0) {
      const double n_samples = static_cast<double>(report.checked);
      const double half_width = std::sqrt(std::log(200.0) / (2.0 * n_samples));
      char buffer[160];
      std::snprintf(buffer, sizeof(buffer),
                    "%llu samples, %zu distinct violations; empirical "
                    "violation rate is within %.4f of the true rate at 99%% "
                    "confidence (two-sided Hoeffding)",
                    static_cast<unsigned long long>(report.checked),
                    report.violations.size(), half_width);
      report.confidence_note = buffer;
    }
  } else {
    // Adversarial: greedy descent on single-edge flips, random restarts.
    CounterRng rng(seed);
    uint64_t spent = 0;
    while (spent < budget) {
      std::vector<char> included(t, 0);
      for (std::size_t i = 0; i < t; ++i) {
        included[i] = rng.next_below(2) ? 1 : 0;
      }
      auto current = eval.evaluate(included);
      ++spent;
      ++report.checked;
      if (current.slack < 0) record(included, current);
      bool improved = true;
      while (improved && spent < budget) {
        improved = false;
        std::size_t best_flip = t;
        SlackEvaluator::Eval best = current;
        for (std::size_t i = 0; i < t && spent < budget; ++i) {
          included[i] ^= 1;
          const auto trial = eval.evaluate(included);
          ++spent;
          ++report.checked;
          if (trial.slack < 0) record(included, trial);
          if (trial.slack < best.slack) {
            best = trial;
            best_flip = i;
          }
          included[i] ^= 1;
        }
        if (best_flip != t) {
          included[best_flip] ^= 1;
          current = best;
          improved = true;
        }
      }
    }
  }

  sort_violations(report.violations);
  report.ok = report.violations.empty();
  return report;
}

FreenessReport freeness_spot_check(const Palette& p,
                                   const std::vector<KGraph>& forbidden,
                                   int n, int trials, uint64_t seed) {
  p.validate();
  if (n < p.k) throw InputError("freeness_spot_check: n must be at least k");
  if (trials < 0) {
    throw InputError("freeness_spot_check: negative trial count");
  }
  for (std::size_t i = 0; i < forbidden.size(); ++i) {
    const auto result = is_colorable(forbidden[i], p);
    if (result.decision != Decision::none) {
      throw InputError("freeness_spot_check: forbidden graph " +
                       std::to_string(i) +
                       " is colorable (or undecided), so sampled graphs "
                       "may legitimately contain it");
    }
  }

  FreenessReport report;
  report.trials = trials;
  for (int trial = 0; trial < trials; ++trial) {
    const auto sample =
        sample_hypergraph(p, n, CounterRng::value_at(seed, trial));
    for (std::size_t i = 0; i < forbidden.size(); ++i) {
      if (contains_copy(sample.graph, forbidden[i]).has_value()) {
        report.pass = false;
        report.violating_trial = trial;
        report.violating_member = static_cast<int>(i);
        return report;
      }
    }
  }
  return report;
}

}  // namespace palcheck
