#pragma once

// The named palette constructions behind the certified density values:
// six parametric families (each a target palette plus gadget palettes
// and a closed-form density) and the palettes of the two non-principal
// pairs, individually addressable for the k=3 and k>=4 cases.

#include <string>
#include <vector>

#include "palcheck/palette.hpp"
#include "palcheck/rational.hpp"

namespace palcheck {

enum class FamilyId {
  frac_r,       // target density (r-1)/r
  frac_r_sq,    // (r-1)^2/r^2, built for k >= 4 only
  half_frac,    // (r-1)/(2r)
  derangement,  // (k-1)^k/k^k
  endpoint,     // 4(k-2)^(k-2)/k^k
  endpoint3,    // 4(k-2)^(k-2)/(3k^k)
  np3_P1,       // 3-uniform pair member, gadget of the 4/27 certificate
  np3_P2,       // 3-uniform pair member, gadget of the 1/4 certificate
  np3_Pprime,   // 3-uniform target of density 4/27
  np3_Pdprime,  // 3-uniform target of density 1/4
  np3_P3,       // 3-uniform witness palette of density 1/27
  npk_P1,       // k>=4 pair member, gadget of the first 1/4 certificate
  npk_P2,       // k>=4 pair member, gadget of the second 1/4 certificate
  npk_Pprime,   // k>=4 target of density 1/4 (endpoints constrained)
  npk_Pdprime,  // k>=4 target of density 1/4 (inner pair constrained)
  npk_P3        // k>=4 witness palette of density 1/16
};

std::string family_id_string(FamilyId id);
FamilyId parse_family_id(const std::string& text);  // InputError on misses

// Closed-form density of the family's primary palette (the target for
// the six parametric families, the named palette itself otherwise).
Rational family_alpha(FamilyId id, int k, int r);

// Builds the primary palette of the family: the target palette for the
// six parametric families, the named palette for the rest. Parameter
// rules: frac_r/frac_r_sq/half_frac need r >= 2; frac_r_sq additionally
// needs k >= 4 (its k=3 value is certified elsewhere and this builder
// refuses to fake it); np3_* fix k=3; npk_* need k >= 4. r is ignored
// by families without an r parameter.
Palette build_named_palette(FamilyId id, int k, int r = 0);

struct PaletteCertificate {
  FamilyId id;
  int k = 0;
  int r = 0;                    // 0 when the family has no r parameter
  Palette target;               // the palette whose density is alpha
  std::vector<Palette> gadgets; // the colorable-side palettes
  Rational alpha = 0;
};

// The full certificate data (target, gadgets, alpha) for the ids that
// carry one: the six parametric families plus np3_P1/np3_P2/npk_P1/
// npk_P2 (whose targets are the corresponding primed palettes). The
// pure target/witness ids (np*_Pprime, np*_Pdprime, np*_P3) have no
// certificate of their own and are refused with a pointer to
// build_named_palette.
PaletteCertificate build_family(FamilyId id, int k, int r = 0);

}  // namespace palcheck
