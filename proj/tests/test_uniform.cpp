#include "palcheck/uniform.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "palcheck/colorability.hpp"
#include "palcheck/errors.hpp"
#include "palcheck/kgraph.hpp"
#include "palcheck/palette.hpp"
#include "palcheck/rational.hpp"
#include "palcheck/reduced.hpp"
#include "palcheck/rng.hpp"

using namespace palcheck;

namespace {

Palette rainbow3() { return Palette::make(3, 3, {{0, 1, 2}}); }

// Two colors, triples admissible iff the first two coordinates differ;
// density 4/8 = 1/2.
Palette first_two_differ() {
  return Palette::make(3, 2, {{0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 0, 1}});
}

Palette complete_palette(int k, int c) {
  std::vector<std::vector<int>> tuples;
  std::vector<int> tup(static_cast<std::size_t>(k), 0);
  for (;;) {
    tuples.push_back(tup);
    int pos = k - 1;
    while (pos >= 0 && tup[static_cast<std::size_t>(pos)] == c - 1) {
      tup[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++tup[static_cast<std::size_t>(pos)];
  }
  return Palette::make(k, c, tuples);
}

std::set<std::vector<std::vector<int>>> violation_edge_sets(
    const DensityReport& report) {
  std::set<std::vector<std::vector<int>>> out;
  for (const auto& v : report.violations) out.insert(v.test_graph.edges);
  return out;
}

}  // namespace

TEST_CASE("jgraph validation and canonicalization") {
  JGraph g;
  g.n = 4;
  g.j = 2;
  g.edges = {{1, 0}, {0, 1}, {2, 3}};
  g.canonicalize();
  CHECK(g.edges == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK_NOTHROW(g.validate());
  CHECK(g.has_edge({0, 1}));
  CHECK_FALSE(g.has_edge({0, 2}));

  JGraph bad = g;
  bad.j = 0;
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = g;
  bad.edges.push_back({3});
  CHECK_THROWS_AS(bad.validate(), InputError);
  bad = g;
  bad.edges = {{0, 7}};
  CHECK_THROWS_AS(bad.validate(), InputError);
}

TEST_CASE("cliques of the complete test graph are all k-subsets") {
  CHECK(cliques(complete_jgraph(6, 2), 4).size() == 15);
  CHECK(cliques(complete_jgraph(6, 1), 3).size() == 20);
  CHECK(cliques(complete_jgraph(5, 3), 4).size() == 5);
}

TEST_CASE("cliques of a 1-graph are the k-subsets of its support") {
  JGraph g;
  g.n = 7;
  g.j = 1;
  g.edges = {{0}, {2}, {3}, {5}};
  const auto out = cliques(g, 3);
  CHECK(out.size() == 4);  // C(4,3) over the support {0,2,3,5}
  const std::vector<std::vector<int>> expected = {
      {0, 2, 3}, {0, 2, 5}, {0, 3, 5}, {2, 3, 5}};
  CHECK(out == expected);
}

TEST_CASE("the 5-cycle has no triangles") {
  JGraph g;
  g.n = 5;
  g.j = 2;
  g.edges = {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}};
  CHECK(cliques(g, 3).empty());
}

TEST_CASE("cliques preconditions") {
  CHECK_THROWS_AS(cliques(complete_jgraph(4, 2), 2), InputError);
  CHECK_THROWS_AS(cliques(complete_jgraph(4, 2), 5), InputError);
}

TEST_CASE("cliques agrees with the naive filter") {
  CounterRng rng(991);
  for (int trial = 0; trial < 60; ++trial) {
    const int j = 1 + static_cast<int>(rng.next_below(3));
    const int k = j + 1 + static_cast<int>(rng.next_below(2));
    const int n = k + static_cast<int>(rng.next_below(
                          static_cast<uint64_t>(12 - k) + 1));
    std::vector<int> base(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) base[static_cast<std::size_t>(v)] = v;
    JGraph g;
    g.n = n;
    g.j = j;
    for (const auto& e : subsets_of(base, j)) {
      if (rng.next_below(2)) g.edges.push_back(e);
    }
    CHECK(cliques(g, k) == cliques_naive(g, k));
  }
}

TEST_CASE("sampling from the complete palette gives the complete graph") {
  const auto sample = sample_hypergraph(complete_palette(3, 2), 6, 5);
  CHECK(sample.graph == complete_kgraph(6, 3));
}

TEST_CASE("sampling from the empty tuple set gives the edgeless graph") {
  const auto p = Palette::make(3, 2, {});
  const auto sample = sample_hypergraph(p, 5, 5);
  CHECK(sample.graph.edges.empty());
  CHECK(sample.graph.n == 5);
}

TEST_CASE("every sample is its own colorability witness") {
  std::vector<int> natural(8);
  for (int v = 0; v < 8; ++v) natural[static_cast<std::size_t>(v)] = v;
  for (const auto& p : {rainbow3(), first_two_differ()}) {
    for (uint64_t seed = 0; seed < 10; ++seed) {
      const auto sample = sample_hypergraph(p, 8, seed);
      CHECK(sample.graph.n == 8);
      CHECK_NOTHROW(sample.graph.validate());
      CHECK(check_ordered_coloring(sample.graph, natural, p,
                                   sample.coloring));
    }
  }
}

TEST_CASE("sampling is deterministic in the seed") {
  const auto a = sample_hypergraph(rainbow3(), 8, 123);
  const auto b = sample_hypergraph(rainbow3(), 8, 123);
  CHECK(a.graph == b.graph);
  CHECK(a.coloring.colors == b.coloring.colors);
  const auto c = sample_hypergraph(rainbow3(), 8, 124);
  CHECK(a.graph.edges != c.graph.edges);
}

TEST_CASE("sample edge fraction concentrates around the density") {
  // Palette density 1/2, n = 60: the edge fraction over C(60,3) = 34220
  // k-sets stays within five binomial standard deviations of 1/2
  // (5 * sqrt(1/4 / 34220) < 0.0136).
  const auto sample = sample_hypergraph(first_two_differ(), 60, 2026);
  const Rational fraction(static_cast<int64_t>(sample.graph.edges.size()),
                          binomial(60, 3));
  const Rational deviation = abs(fraction - Rational(1, 2));
  CHECK(deviation < Rational(136, 10000));
}

TEST_CASE("sample_hypergraph rejects n below k") {
  CHECK_THROWS_AS(sample_hypergraph(rainbow3(), 2, 1), InputError);
}

TEST_CASE("complete graph is (1, mu)-dense, exhaustively") {
  const auto h = complete_kgraph(6, 3);
  const auto report =
      check_uniform_density(h, 1, 0, DensityMode::exhaustive, 0, 64);
  CHECK(report.ok);
  CHECK(report.exhaustive);
  CHECK(report.checked == 64);
  CHECK(report.violations.empty());
}

TEST_CASE("edgeless graph violates positive density") {
  KGraph h;
  h.n = 6;
  h.k = 3;
  const auto report = check_uniform_density(h, Rational(1, 2), Rational(1, 100),
                                            DensityMode::exhaustive, 0, 64);
  CHECK_FALSE(report.ok);
  CHECK(report.exhaustive);
  REQUIRE_FALSE(report.violations.empty());

  // Worst violation first: the full vertex set maximizes the clique count.
  const auto& worst = report.violations.front();
  CHECK(worst.test_graph.edges.size() == 6);
  CHECK(worst.clique_count == 20);
  CHECK(worst.edge_count == 0);
  // slack = 0 - (1/2)*20 + (1/100)*216 = -10 + 54/25.
  CHECK(worst.slack == Rational(-10) + Rational(54, 25));

  // Every reported violation recounts as violating, via the generic
  // clique enumerator and the naive one.
  for (const auto& v : report.violations) {
    CHECK(density_slack(h, v.test_graph, Rational(1, 2), Rational(1, 100)) ==
          v.slack);
    CHECK(v.slack < 0);
    const auto naive = cliques_naive(v.test_graph, 3);
    CHECK(BigInt(static_cast<int64_t>(naive.size())) == v.clique_count);
  }
}

TEST_CASE("violations grow as mu shrinks") {
  KGraph h;
  h.n = 6;
  h.k = 3;
  const auto strict = check_uniform_density(h, Rational(1, 2), 0,
                                            DensityMode::exhaustive, 0, 64);
  const auto loose = check_uniform_density(h, Rational(1, 2), Rational(1, 100),
                                           DensityMode::exhaustive, 0, 64);
  const auto strict_set = violation_edge_sets(strict);
  const auto loose_set = violation_edge_sets(loose);
  CHECK(strict_set.size() >= loose_set.size());
  for (const auto& edges : loose_set) {
    CHECK(strict_set.count(edges) == 1);
  }
}

TEST_CASE("sampled hypergraph at n=14 is exhaustively dense") {
  // Density 1/2 palette, slack d = 1/2 - 1/10, mu = 1/20: full
  // enumeration of all 2^14 test graphs finds no violation.
  const auto sample = sample_hypergraph(first_two_differ(), 14, 7);
  const auto report =
      check_uniform_density(sample.graph, Rational(2, 5), Rational(1, 20),
                            DensityMode::exhaustive, 0, 16384);
  CHECK(report.ok);
  CHECK(report.exhaustive);
  CHECK(report.checked == 16384);
}

TEST_CASE("exhaustive mode refuses over-budget enumerations") {
  const auto h = complete_kgraph(14, 3);
  CHECK_THROWS_WITH_AS(
      check_uniform_density(h, 1, 0, DensityMode::exhaustive, 0, 100),
      doctest::Contains("16384"), InfeasibleError);
}

TEST_CASE("sampled mode reports violations with a confidence note") {
  KGraph h;
  h.n = 6;
  h.k = 3;
  const auto report = check_uniform_density(h, Rational(1, 2), 0,
                                            DensityMode::sampled, 99, 50);
  CHECK(report.checked == 50);
  CHECK_FALSE(report.exhaustive);
  CHECK_FALSE(report.confidence_note.empty());
  CHECK_FALSE(report.ok);
  for (const auto& v : report.violations) {
    CHECK(v.slack < 0);
    CHECK(density_slack(h, v.test_graph, Rational(1, 2), 0) == v.slack);
  }
  const auto again = check_uniform_density(h, Rational(1, 2), 0,
                                           DensityMode::sampled, 99, 50);
  CHECK(violation_edge_sets(report) == violation_edge_sets(again));
}

TEST_CASE("adversarial mode hunts down violations") {
  KGraph h;
  h.n = 8;
  h.k = 3;
  const auto report = check_uniform_density(h, Rational(1, 2), Rational(1, 50),
                                            DensityMode::adversarial, 4, 120);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.exhaustive);
  for (const auto& v : report.violations) {
    CHECK(v.slack < 0);
    CHECK(density_slack(h, v.test_graph, Rational(1, 2), Rational(1, 50)) ==
          v.slack);
  }
}

TEST_CASE("adversarial mode never invents violations on a dense graph") {
  const auto h = complete_kgraph(7, 3);
  const auto report = check_uniform_density(h, Rational(1, 2), 0,
                                            DensityMode::adversarial, 4, 200);
  CHECK(report.ok);
  CHECK(report.violations.empty());
  CHECK(report.checked == 200);
}

TEST_CASE("generic path handles 4-uniform graphs") {
  SUBCASE("complete graph is 1-dense") {
    const auto h = complete_kgraph(5, 4);
    const auto report =
        check_uniform_density(h, 1, 0, DensityMode::exhaustive, 0, 1024);
    CHECK(report.ok);
    CHECK(report.checked == 1024);
  }
  SUBCASE("edgeless graph is caught by the complete 2-graph") {
    KGraph h;
    h.n = 5;
    h.k = 4;
    const auto report = check_uniform_density(h, Rational(1, 2), 0,
                                              DensityMode::exhaustive, 0, 1024);
    REQUIRE_FALSE(report.ok);
    const auto& worst = report.violations.front();
    CHECK(worst.test_graph.edges.size() == 10);
    CHECK(worst.clique_count == 5);
    CHECK(worst.slack == Rational(-5, 2));
    const auto naive = cliques_naive(worst.test_graph, 4);
    CHECK(BigInt(static_cast<int64_t>(naive.size())) == worst.clique_count);
  }
}

TEST_CASE("check_uniform_density validates inputs") {
  const auto h = complete_kgraph(5, 3);
  CHECK_THROWS_AS(check_uniform_density(h, Rational(3, 2), 0,
                                        DensityMode::exhaustive, 0, 100),
                  InputError);
  CHECK_THROWS_AS(check_uniform_density(h, Rational(1, 2), -1,
                                        DensityMode::exhaustive, 0, 100),
                  InputError);
  CHECK_THROWS_AS(check_uniform_density(complete_kgraph(4, 2), 1, 0,
                                        DensityMode::exhaustive, 0, 100),
                  InputError);
}

TEST_CASE("freeness spot check passes for the rainbow palette") {
  const auto report =
      freeness_spot_check(rainbow3(), {complete_kgraph(4, 3)}, 10, 20, 11);
  CHECK(report.pass);
  CHECK(report.trials == 20);
  CHECK(report.violating_trial == -1);
}

TEST_CASE("freeness spot check is vacuous without forbidden graphs") {
  const auto report = freeness_spot_check(rainbow3(), {}, 6, 3, 1);
  CHECK(report.pass);
}

TEST_CASE("freeness spot check rejects colorable forbidden graphs") {
  KGraph path;
  path.n = 4;
  path.k = 3;
  path.edges = {{0, 1, 2}, {1, 2, 3}};
  CHECK_THROWS_AS(freeness_spot_check(rainbow3(), {path}, 8, 5, 1),
                  InputError);
}
