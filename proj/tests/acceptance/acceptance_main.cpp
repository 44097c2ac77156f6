// Acceptance gate: re-checks the eight shipped guarantees end to end and
// prints one [PASS]/[FAIL] line per criterion. Exit code = number of
// failed criteria. Every randomized step uses fixed seeds, so the gate
// itself is deterministic.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "palcheck/certify.hpp"
#include "palcheck/colorability.hpp"
#include "palcheck/errors.hpp"
#include "palcheck/families.hpp"
#include "palcheck/hom.hpp"
#include "palcheck/json_io.hpp"
#include "palcheck/kgraph.hpp"
#include "palcheck/oracles.hpp"
#include "palcheck/palette.hpp"
#include "palcheck/rational.hpp"
#include "palcheck/reduced.hpp"
#include "palcheck/report.hpp"
#include "palcheck/rng.hpp"
#include "palcheck/uniform.hpp"

namespace {

using namespace palcheck;
using Clock = std::chrono::steady_clock;

struct Gate {
  int failed = 0;

  // Runs one criterion; fn appends human-readable problems to its
  // argument and returns a short success annotation.
  void criterion(int number, const std::string& name, double limit_seconds,
                 const std::function<std::string(std::vector<std::string>&)>& fn) {
    std::vector<std::string> problems;
    std::string note;
    const auto start = Clock::now();
    try {
      note = fn(problems);
    } catch (const std::exception& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_seconds > 0 && seconds > limit_seconds) {
      std::ostringstream over;
      over << "took " << seconds << " s, limit " << limit_seconds << " s";
      problems.push_back(over.str());
    }
    std::ostringstream line;
    line << (problems.empty() ? "[PASS] " : "[FAIL] ") << number << ". "
         << name;
    if (!note.empty()) line << " — " << note;
    line.precision(2);
    line << " (" << std::fixed << seconds << " s)";
    std::cout << line.str() << "\n";
    for (const std::string& p : problems) std::cout << "       " << p << "\n";
    if (!problems.empty()) ++failed;
  }
};

// Deterministic random palette on `num_colors` colors: every possible
// k-tuple kept with probability 1/2.
Palette random_palette(CounterRng& rng, int k, int num_colors) {
  std::vector<std::vector<int>> tuples;
  std::vector<int> tup(static_cast<size_t>(k), 0);
  for (;;) {
    if (rng.next_below(2) == 0) tuples.push_back(tup);
    int pos = k - 1;
    while (pos >= 0 && tup[static_cast<size_t>(pos)] == num_colors - 1) {
      tup[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++tup[static_cast<size_t>(pos)];
  }
  return Palette::make(k, num_colors, tuples);
}

// Deterministic random k-graph on up to `max_n` vertices.
KGraph random_kgraph(CounterRng& rng, int k, int max_n, int max_edges) {
  KGraph f;
  f.n = k + static_cast<int>(rng.next_below(
                static_cast<uint64_t>(max_n - k + 1)));
  f.k = k;
  const int edge_count = static_cast<int>(rng.next_below(
      static_cast<uint64_t>(max_edges + 1)));
  for (int e = 0; e < edge_count; ++e) {
    std::vector<int> verts(static_cast<size_t>(f.n));
    for (int v = 0; v < f.n; ++v) verts[static_cast<size_t>(v)] = v;
    rng.shuffle(verts);
    verts.resize(static_cast<size_t>(k));
    std::sort(verts.begin(), verts.end());
    f.edges.push_back(verts);
  }
  f.canonicalize();
  return f;
}

struct BundleSpec {
  std::string id;
  int k = 0;
  int r = 0;
};

const std::vector<BundleSpec>& bundle_grid() {
  static const std::vector<BundleSpec> grid = {
      {"thm1_4_case1", 3, 2}, {"thm1_4_case1", 3, 3},
      {"thm1_4_case1", 4, 2}, {"thm1_4_case1", 4, 3},
      {"thm1_4_case2", 4, 2}, {"thm1_4_case2", 4, 3},
      {"thm1_4_case3", 3, 2}, {"thm1_4_case3", 3, 3},
      {"thm1_4_case3", 4, 2}, {"thm1_4_case3", 4, 3},
      {"thm1_4_case4", 3, 0}, {"thm1_4_case4", 4, 0},
      {"thm1_4_case5", 3, 0}, {"thm1_4_case5", 4, 0},
      {"thm1_4_case6", 3, 0}, {"thm1_4_case6", 4, 0},
      {"thm1_5_k3", 3, 0},    {"thm1_5_k4", 4, 0},
  };
  return grid;
}

std::string bundle_key(const BundleSpec& b) {
  return b.id + "/k=" + std::to_string(b.k) + "/r=" + std::to_string(b.r);
}

}  // namespace

int main() {
  Gate gate;
  // Bundle reports produced under criterion 2 and re-inspected by 3.
  std::map<std::string, CertificateReport> bundles;

  // ------------------------------------------------------------------
  gate.criterion(1, "exact closed-form densities", 1.0, [&](auto& problems) {
    struct Row {
      FamilyId id;
      int k, r;
      Rational expect;
    };
    std::vector<Row> rows;
    for (int k : {3, 4}) {
      for (int r : {2, 3, 4}) {
        rows.push_back({FamilyId::frac_r, k, r, Rational(r - 1, r)});
        rows.push_back({FamilyId::half_frac, k, r, Rational(r - 1, 2 * r)});
      }
    }
    for (int r : {2, 3, 4}) {
      rows.push_back(
          {FamilyId::frac_r_sq, 4, r, Rational((r - 1) * (r - 1), r * r)});
    }
    const auto ipow_ll = [](long long b, int e) {
      long long out = 1;
      for (int i = 0; i < e; ++i) out *= b;
      return out;
    };
    for (int k : {3, 4, 5}) {
      rows.push_back({FamilyId::derangement, k, 0,
                      Rational(ipow_ll(k - 1, k), ipow_ll(k, k))});
      rows.push_back({FamilyId::endpoint, k, 0,
                      Rational(4 * ipow_ll(k - 2, k - 2), ipow_ll(k, k))});
    }
    for (int k : {3, 4}) {
      rows.push_back({FamilyId::endpoint3, k, 0,
                      Rational(4 * ipow_ll(k - 2, k - 2), 3 * ipow_ll(k, k))});
    }
    int values = 0;
    for (const Row& row : rows) {
      const std::string what = family_id_string(row.id) +
                               "(k=" + std::to_string(row.k) +
                               ",r=" + std::to_string(row.r) + ")";
      if (family_alpha(row.id, row.k, row.r) != row.expect) {
        problems.push_back(what + ": alpha != " + rational_str(row.expect));
      }
      const PaletteCertificate cert = build_family(row.id, row.k, row.r);
      if (density(cert.target) != row.expect) {
        problems.push_back(what + ": built target density " +
                           rational_str(density(cert.target)) + " != " +
                           rational_str(row.expect));
      }
      values += 2;
    }
    const std::vector<std::pair<FamilyId, Rational>> named = {
        {FamilyId::np3_Pprime, Rational(4, 27)},
        {FamilyId::np3_Pdprime, Rational(1, 4)},
        {FamilyId::np3_P3, Rational(1, 27)},
        {FamilyId::npk_Pprime, Rational(1, 4)},
        {FamilyId::npk_Pdprime, Rational(1, 4)},
        {FamilyId::npk_P3, Rational(1, 16)},
    };
    for (const auto& [id, expect] : named) {
      const int k = (id == FamilyId::np3_Pprime || id == FamilyId::np3_Pdprime ||
                     id == FamilyId::np3_P3)
                        ? 3
                        : 4;
      const Palette p = build_named_palette(id, k);
      if (density(p) != expect) {
        problems.push_back(family_id_string(id) + ": density " +
                           rational_str(density(p)) + " != " +
                           rational_str(expect));
      }
      ++values;
    }
    return std::to_string(values) + " exact rational values";
  });

  // ------------------------------------------------------------------
  gate.criterion(2, "negative homomorphism certificates", 0.0,
                 [&](auto& problems) {
    double max_bundle_seconds = 0;
    int refutations = 0;
    for (const BundleSpec& b : bundle_grid()) {
      const auto start = Clock::now();
      const CertificateReport rep = verify_theorem(b.id, b.k, b.r);
      const double seconds =
          std::chrono::duration<double>(Clock::now() - start).count();
      max_bundle_seconds = std::max(max_bundle_seconds, seconds);
      if (seconds > 600.0) {
        problems.push_back(bundle_key(b) + ": bundle took " +
                           std::to_string(seconds) + " s, limit 600 s");
      }
      bundles.emplace(bundle_key(b), rep);
      if (rep.verdict != Verdict::pass) {
        problems.push_back(bundle_key(b) + ": bundle verdict " +
                           verdict_string(rep.verdict));
      }
      int a1_checks = 0;
      for (const CheckResult& check : rep.checks) {
        if (check.condition.rfind("A1", 0) != 0) continue;
        ++a1_checks;
        if (check.verdict != Verdict::pass) {
          problems.push_back(bundle_key(b) + ": A1 verdict " +
                             verdict_string(check.verdict) + " for " +
                             check.subject);
        }
        int logged = 0;
        for (const std::string& line : check.exhaustion) {
          if (line.find(": none; search space ") != std::string::npos) {
            ++logged;
          }
        }
        if (logged == 0) {
          problems.push_back(bundle_key(b) +
                             ": no refutation logged a search space for " +
                             check.subject);
        }
        refutations += logged;
        if (b.id == "thm1_5_k3" &&
            check.detail.find("literal products run for 1/1") ==
                std::string::npos) {
          problems.push_back(
              bundle_key(b) +
              ": three-color pair did not run its literal product: " +
              check.detail);
        }
      }
      if (a1_checks == 0) {
        problems.push_back(bundle_key(b) + ": no A1 checks in the bundle");
      }
    }
    std::ostringstream note;
    note.precision(2);
    note << bundle_grid().size() << " bundles, " << refutations
         << " logged refutations, slowest " << std::fixed
         << max_bundle_seconds << " s";
    return note.str();
  });

  // ------------------------------------------------------------------
  gate.criterion(3, "bounded palette sweeps", 1800.0, [&](auto& problems) {
    if (bundles.empty()) {
      problems.push_back("no bundle reports available (criterion 2 crashed)");
      return std::string();
    }
    int swept = 0;
    bool saw_three_color = false;
    for (const auto& [key, rep] : bundles) {
      for (const CheckResult& check : rep.checks) {
        if (check.condition != "A2-bounded") continue;
        ++swept;
        if (check.verdict != Verdict::pass) {
          problems.push_back(key + ": bounded sweep verdict " +
                             verdict_string(check.verdict) + " for " +
                             check.subject);
        }
        if (!check.counterexamples.empty()) {
          problems.push_back(key + ": bounded sweep found " +
                             std::to_string(check.counterexamples.size()) +
                             " counterexample(s)");
        }
        if (check.subject.find("2^27") != std::string::npos) {
          saw_three_color = true;
          bool full = false;
          for (const std::string& line : check.exhaustion) {
            if (line.find("134217728") != std::string::npos) full = true;
          }
          if (!full) {
            problems.push_back(key +
                               ": three-color sweep did not report full "
                               "coverage of the 2^27 space");
          }
        }
      }
    }
    if (!saw_three_color) {
      problems.push_back("the 2^27 three-color sweep never ran");
    }
    return std::to_string(swept) + " sweeps, zero counterexamples";
  });

  // ------------------------------------------------------------------
  gate.criterion(4, "digraph oracles", 600.0, [&](auto& problems) {
    int grid_points = 0;
    for (int n = 1; n <= 5; ++n) {
      for (int r = 1; r <= 3; ++r) {
        const ArcOracleResult res = oracle_max_arcs_no_TT(n, r);
        ++grid_points;
        if (Rational(res.max_arcs) > res.bound) {
          problems.push_back("no-TT n=" + std::to_string(n) +
                             " r=" + std::to_string(r) + ": max " +
                             std::to_string(res.max_arcs) + " exceeds " +
                             rational_str(res.bound));
        }
        if (static_cast<int>(res.extremal.arcs.size()) != res.max_arcs) {
          problems.push_back("no-TT n=" + std::to_string(n) +
                             " r=" + std::to_string(r) +
                             ": extremal witness arc count mismatch");
        }
      }
    }
    for (int n = 1; n <= 5; ++n) {
      for (int r = 1; r < n; ++r) {
        const ArcOracleResult res = oracle_max_arcs_no_walk(n, r);
        ++grid_points;
        if (Rational(res.max_arcs) > res.bound) {
          problems.push_back("no-walk n=" + std::to_string(n) +
                             " r=" + std::to_string(r) + ": max " +
                             std::to_string(res.max_arcs) + " exceeds " +
                             rational_str(res.bound));
        }
        if (static_cast<int>(res.extremal.arcs.size()) != res.max_arcs) {
          problems.push_back("no-walk n=" + std::to_string(n) +
                             " r=" + std::to_string(r) +
                             ": extremal witness arc count mismatch");
        }
      }
    }
    return std::to_string(grid_points) + " grid points with witnesses";
  });

  // ------------------------------------------------------------------
  gate.criterion(5, "reduced-map / colorability equivalence", 300.0,
                 [&](auto& problems) {
    CounterRng rng(777);
    int witnesses = 0;
    int refutations = 0;
    const int trials = 240;
    for (int trial = 0; trial < trials; ++trial) {
      const int k = (trial % 2 == 0) ? 3 : 2;
      const int num_colors = 1 + static_cast<int>(rng.next_below(3));
      const Palette p = random_palette(rng, k, num_colors);
      const KGraph f = random_kgraph(rng, k, 5, 4);
      const ColorResult color = is_colorable(f, p);
      if (color.decision == Decision::unknown) {
        problems.push_back("trial " + std::to_string(trial) +
                           ": colorability solver returned unknown");
        continue;
      }
      const auto map = embeds(from_palette(p, f.n), f);
      const bool colorable = color.decision == Decision::witness;
      if (colorable != map.has_value()) {
        problems.push_back("trial " + std::to_string(trial) +
                           ": colorable=" + (colorable ? "yes" : "no") +
                           " but reduced map " +
                           (map.has_value() ? "exists" : "missing"));
        continue;
      }
      if (map.has_value()) {
        if (!check_reduced_map(from_palette(p, f.n), f, *map)) {
          problems.push_back("trial " + std::to_string(trial) +
                             ": reduced map failed validation");
        }
        ++witnesses;
      } else {
        ++refutations;
      }
    }
    if (witnesses == 0) problems.push_back("no colorable instances drawn");
    if (refutations == 0) problems.push_back("no refuted instances drawn");
    return std::to_string(trials) + " instances (" +
           std::to_string(witnesses) + " colorable, " +
           std::to_string(refutations) + " not), zero discrepancies";
  });

  // ------------------------------------------------------------------
  gate.criterion(6, "uniform-density construction", 300.0,
                 [&](auto& problems) {
    const PaletteCertificate cert = build_family(FamilyId::frac_r, 3, 2);
    const Rational d = Rational(1, 2) - Rational(1, 10);
    const Rational mu(1, 20);
    int runs = 0;
    for (uint64_t seed = 20260815; seed < 20260820; ++seed) {
      const SampledHypergraph s = sample_hypergraph(cert.target, 14, seed);
      const DensityReport rep = check_uniform_density(
          s.graph, d, mu, DensityMode::exhaustive, seed, 50'000);
      ++runs;
      if (!rep.exhaustive) {
        problems.push_back("seed " + std::to_string(seed) +
                           ": check was not exhaustive");
      }
      if (rep.checked != 16384) {
        problems.push_back("seed " + std::to_string(seed) + ": checked " +
                           std::to_string(rep.checked) +
                           " test graphs, expected 16384");
      }
      if (!rep.ok) {
        problems.push_back("seed " + std::to_string(seed) + ": " +
                           std::to_string(rep.violations.size()) +
                           " density violations");
      }
    }
    return std::to_string(runs) +
           " seeds, all 16384 test graphs each, zero violations";
  });

  // ------------------------------------------------------------------
  gate.criterion(7, "algebraic property suites", 0.0, [&](auto& problems) {
    std::ostringstream note;
    // Reverse is an involution.
    {
      CounterRng rng(101);
      int count = 0;
      std::vector<Palette> pool;
      for (const FamilyId id :
           {FamilyId::np3_Pprime, FamilyId::np3_Pdprime, FamilyId::np3_P3}) {
        pool.push_back(build_named_palette(id, 3));
      }
      for (int i = 0; i < 30; ++i) {
        pool.push_back(random_palette(
            rng, 3, 1 + static_cast<int>(rng.next_below(3))));
      }
      for (const Palette& p : pool) {
        if (reverse_palette(reverse_palette(p)) != p) {
          problems.push_back("reverse involution failed on " +
                             std::to_string(p.tuples.size()) + "-tuple palette");
        }
        ++count;
      }
      if (count == 0) problems.push_back("reverse suite was empty");
      note << "involution x" << count;
    }
    // Density is multiplicative over products.
    {
      CounterRng rng(202);
      int count = 0;
      for (int i = 0; i < 30; ++i) {
        const Palette a = random_palette(
            rng, 3, 1 + static_cast<int>(rng.next_below(3)));
        const Palette b = random_palette(
            rng, 3, 1 + static_cast<int>(rng.next_below(3)));
        if (density(product({a, b})) != density(a) * density(b)) {
          problems.push_back("product density not multiplicative at trial " +
                             std::to_string(i));
        }
        ++count;
      }
      if (count == 0) problems.push_back("product suite was empty");
      note << ", product x" << count;
    }
    // Symmetrization color count is |C| * (k-1)!.
    {
      int count = 0;
      const std::vector<std::pair<FamilyId, int>> rows = {
          {FamilyId::np3_Pdprime, 3},
          {FamilyId::np3_Pprime, 3},
          {FamilyId::npk_Pprime, 4},
          {FamilyId::npk_P3, 4},
      };
      for (const auto& [id, k] : rows) {
        const Palette p = build_named_palette(id, k);
        const Palette sym = symmetrize(p);
        if (sym.num_colors !=
            p.num_colors * static_cast<int>(factorial(k - 1))) {
          problems.push_back(family_id_string(id) +
                             ": symmetrized color count " +
                             std::to_string(sym.num_colors));
        }
        ++count;
      }
      note << ", sym-colors x" << count;
    }
    // Colorings survive order changes over the symmetrized palette.
    {
      const Palette p = build_named_palette(FamilyId::np3_Pdprime, 3);
      int pairs = 0;
      for (uint64_t seed = 1; seed <= 5; ++seed) {
        const SampledHypergraph s = sample_hypergraph(p, 7, seed);
        const TransferCheck t =
            check_symmetrization_transfer(s.graph, p, 10, seed);
        if (!t.precondition_ok) {
          problems.push_back("transfer seed " + std::to_string(seed) +
                             ": sampled graph was not colorable");
          continue;
        }
        if (!t.pass) {
          problems.push_back("transfer seed " + std::to_string(seed) +
                             ": an order failed");
        }
        pairs += t.checked;
      }
      if (pairs < 50) {
        problems.push_back("only " + std::to_string(pairs) +
                           " transfer pairs checked, need 50");
      }
      note << ", transfer x" << pairs;
    }
    // Monotone-subsequence guarantee over all permutations of length 5.
    {
      std::vector<int> order = {0, 1, 2, 3, 4};
      int perms = 0;
      do {
        std::vector<Rational> seq;
        for (int i : order) seq.push_back(i + 1);
        const auto [inc, dec] = longest_monotone(seq);
        if (inc * dec < 5) {
          problems.push_back("monotone guarantee failed on a permutation");
        }
        ++perms;
      } while (std::next_permutation(order.begin(), order.end()));
      if (perms != 120) {
        problems.push_back("expected 120 permutations, saw " +
                           std::to_string(perms));
      }
      note << ", monotone x" << perms;
    }
    // Pruned colorability agrees with full order enumeration.
    {
      CounterRng rng(303);
      int count = 0;
      for (int i = 0; i < 40; ++i) {
        const Palette p = random_palette(
            rng, 3, 1 + static_cast<int>(rng.next_below(3)));
        const KGraph f = random_kgraph(rng, 3, 4, 4);
        const ColorResult fast = is_colorable(f, p);
        const ColorResult slow = is_colorable_full_enumeration(f, p);
        if (fast.decision != slow.decision) {
          problems.push_back("colorability disagreement at trial " +
                             std::to_string(i));
        }
        ++count;
      }
      if (count == 0) problems.push_back("colorability suite was empty");
      note << ", colorability x" << count;
    }
    // Backtracking homomorphism search agrees with naive map enumeration.
    {
      CounterRng rng(404);
      int count = 0;
      for (int i = 0; i < 40; ++i) {
        const Palette src = random_palette(
            rng, 3, 1 + static_cast<int>(rng.next_below(5)));
        const Palette dst = random_palette(
            rng, 3, 1 + static_cast<int>(rng.next_below(3)));
        const HomResult fast = hom_exists(src, dst);
        const HomResult slow = hom_exists_naive(src, dst);
        if (fast.status != slow.status) {
          problems.push_back("homomorphism disagreement at trial " +
                             std::to_string(i));
        }
        ++count;
      }
      if (count == 0) problems.push_back("homomorphism suite was empty");
      note << ", hom x" << count;
    }
    return note.str();
  });

  // ------------------------------------------------------------------
  gate.criterion(8, "byte-identical reports", 0.0, [&](auto& problems) {
    int comparisons = 0;
    const auto expect_equal = [&](const std::string& what,
                                  const std::string& a, const std::string& b) {
      ++comparisons;
      if (a != b) problems.push_back(what + ": reports differ");
      if (a.empty()) problems.push_back(what + ": empty report");
    };
    const auto certify_bytes = [] {
      Json config;
      config["theorem"] = "thm1_4_case1";
      config["k"] = 3;
      config["r"] = 2;
      return render_report(report_envelope(
          "certify", config,
          certificate_report_json(verify_theorem("thm1_4_case1", 3, 2))));
    };
    expect_equal("certify", certify_bytes(), certify_bytes());

    const Palette target = build_family(FamilyId::frac_r, 3, 2).target;
    const auto sample_bytes = [&] {
      const SampledHypergraph s = sample_hypergraph(target, 9, 42);
      Json doc = kgraph_to_json(s.graph);
      doc["coloring"] = shadow_coloring_json(target, s.coloring);
      return render_report(
          report_envelope("sample", Json::object(), std::move(doc)));
    };
    expect_equal("sample", sample_bytes(), sample_bytes());

    const SampledHypergraph s = sample_hypergraph(target, 10, 42);
    const auto udense_bytes = [&](DensityMode mode) {
      const DensityReport rep = check_uniform_density(
          s.graph, Rational(2, 5), Rational(1, 20), mode, 7, 300);
      return render_report(report_envelope("udense", Json::object(),
                                           density_report_json(rep)));
    };
    expect_equal("udense-sampled", udense_bytes(DensityMode::sampled),
                 udense_bytes(DensityMode::sampled));
    expect_equal("udense-adversarial", udense_bytes(DensityMode::adversarial),
                 udense_bytes(DensityMode::adversarial));

    const ReducedKGraph a = from_palette(target, 4);
    const auto contract_bytes = [&] {
      const ContractResult res = contract(a, 3, 2, Rational(0), 7, 20'000);
      return render_report(report_envelope("contract", Json::object(),
                                           contract_result_json(res)));
    };
    expect_equal("contract", contract_bytes(), contract_bytes());
    return std::to_string(comparisons) + " repeated runs compared";
  });

  std::cout << "acceptance: " << (8 - gate.failed) << "/8 criteria passed\n";
  return gate.failed;
}
