#pragma once

// Mechanical verification of the palette certificates behind the
// certified density values. A certificate for a value alpha consists of
// a target palette of density alpha plus gadget palettes, and is valid
// when (A1) no gadget's mixed product maps homomorphically into the
// target or its reverse, and (A2) every palette of density above alpha
// admits some gadget mapping into it or its reverse. (A1) is decided
// exactly by exhaustive search; (A2) is checked along two bounded
// routes: exact support-profile arithmetic, and exhaustive enumeration
// of all small palettes.

#include <cstdint>
#include <string>
#include <vector>

#include "palcheck/families.hpp"
#include "palcheck/palette.hpp"
#include "palcheck/rational.hpp"

namespace palcheck {

enum class Verdict { pass, fail, unknown };

std::string verdict_string(Verdict v);

struct CheckResult {
  std::string condition;  // "density" | "A1" | "A2-structural" |
                          // "A2-bounded" | "digraph-oracle" |
                          // "hom-witness" | "separation"
  std::string subject;    // what exactly was checked
  Verdict verdict = Verdict::fail;
  std::vector<std::string> witnesses;        // maps/optima found
  std::vector<std::string> exhaustion;       // search-space evidence
  std::vector<std::string> counterexamples;  // offending objects, verbatim
  std::string detail;                        // one-line summary
};

struct A1Options {
  // The literal mixed-product search runs only when the product keeps at
  // most this many colors; above it the single-gadget shortcut (justified
  // by recorded cross-homomorphisms into the other gadgets'
  // symmetrizations) stands alone.
  long long full_product_color_cap = 10'000;
  // Node budget per mixed-product homomorphism search; 0 = unlimited.
  // Exhaustion demotes the overall verdict to unknown while keeping the
  // shortcut evidence.
  uint64_t node_budget = 50'000'000;
};

// Condition (A1) for a certificate. Both the shortcut and the literal
// product route are run whenever feasible and must agree.
CheckResult check_A1(const PaletteCertificate& cert, const A1Options& opts = {});

// Condition (A2), structural route: exact integer arithmetic over all
// support-size profiles for |C| = 1..n_cap, plus — where the argument
// reduces to a one-variable bound — exact evaluation at the maximizer
// and a derivative-sign sweep over a 1000-point rational grid. Defined
// for the six parametric families and the pair-certificate ids.
CheckResult check_A2_structural(FamilyId id, int k, int r, int n_cap = 24);

enum class SweepMode { exhaustive, sampled };

struct A2BoundedOptions {
  int max_colors = 2;
  // Upper bound on the number of palettes the exhaustive sweep may
  // enumerate; larger spaces are refused with the exact count.
  uint64_t palette_budget = 1'000'000;
  // Sampled mode draws `samples` random palettes instead of enumerating;
  // it can find counterexamples but never certifies (clean = unknown).
  SweepMode mode = SweepMode::exhaustive;
  uint64_t samples = 2000;
  uint64_t seed = 20260815;
};

// Condition (A2), bounded route. Exhaustive mode enumerates every
// palette on 1..max_colors colors (every tuple subset, colors fixed)
// and checks that each one of density strictly above alpha admits some
// gadget mapping into it or its reverse; sampled mode spot-checks
// random palettes.
CheckResult check_A2_bounded(const std::vector<Palette>& gadgets,
                             const Rational& alpha, int k,
                             const A2BoundedOptions& opts = {});

// The joint 3-uniform separation claim at alpha = 1/27 over all 2^27
// palettes on three colors: every tuple set with more than one tuple
// has two coordinate supports intersecting, hence admits one of the
// pair gadgets. Implemented by meet-in-the-middle over coordinate
// support signatures, with hom_exists validating the signature
// criterion on `spot_checks` randomly drawn palettes.
CheckResult check_A2_three_color_separation(uint64_t spot_checks = 2000,
                                            uint64_t seed = 20260815);

// Separation arithmetic shared by the two pair bundles: over all
// support-size profiles with |C| <= n_cap, disjoint supports at the
// distinguished coordinates force density <= alpha.
CheckResult check_separation_structural_k3(int n_cap = 60);
CheckResult check_separation_structural_k4plus(int k, int n_cap = 40);

struct CertificateReport {
  std::string theorem;
  int k = 0;
  int r = 0;
  Verdict verdict = Verdict::fail;  // fail if any check fails,
                                    // unknown if any is unknown
  std::vector<CheckResult> checks;
};

// Named check bundles, each re-verifying one certified value end to end:
//   thm1_4_case1  first-pair-distinct family      (k, r)
//   thm1_4_case2  both-pairs-distinct family      (k >= 4, r)
//   thm1_4_case3  increasing-endpoints family     (k, r)
//   thm1_4_case4  fixed-point-free family         (k)
//   thm1_4_case5  two-endpoint family             (k)
//   thm1_4_case6  three-class endpoint family     (k)
//   thm1_5_k3     3-uniform non-principal pair
//   thm1_5_k4     k>=4 non-principal pair         (k)
// max_colors feeds the bounded (A2) sweep; the thm1_5_k3 bundle covers
// the three-color layer through the signature sweep and runs the raw
// enumeration on at most two colors.
CertificateReport verify_theorem(const std::string& theorem_id, int k, int r,
                                 int max_colors = 2);

std::vector<std::string> known_theorem_ids();

}  // namespace palcheck
