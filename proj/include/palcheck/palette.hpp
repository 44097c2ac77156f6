#pragma once

// k-palettes: a finite set of colors together with a set of admissible
// ordered k-tuples of colors. Colors are stored as integer ids 0..n-1 with
// a parallel list of display labels; tuples are kept lexicographically
// sorted and deduplicated so that structural equality is just ==.

#include <optional>
#include <string>
#include <vector>

#include "palcheck/digraph.hpp"
#include "palcheck/permutation.hpp"
#include "palcheck/rational.hpp"

namespace palcheck {

struct Palette {
  int k = 0;
  int num_colors = 0;
  std::vector<std::string> labels;       // size num_colors, pairwise distinct
  std::vector<std::vector<int>> tuples;  // each of length k, entries in range

  // Sorts and deduplicates the tuple list (the canonical storage form).
  void canonicalize();
  // Throws InputError on any violated invariant.
  void validate() const;
  bool has_tuple(const std::vector<int>& t) const;  // binary search

  bool operator==(const Palette&) const = default;

  // Convenience constructor with generated labels "c0".."c<n-1>".
  static Palette make(int k, int num_colors,
                      std::vector<std::vector<int>> tuples);
};

// Hard ceilings for the constructions below; exceeding them throws
// InfeasibleError rather than silently grinding.
inline constexpr long long kMaxProductColors = 1'000'000;
inline constexpr long long kMaxProductTuples = 10'000'000;
inline constexpr int kMaxCanonicalColors = 8;

// |tuples| / num_colors^k, exact.
Rational density(const Palette& p);

// Reverses every tuple. An involution.
Palette reverse_palette(const Palette& p);

// Product palette: colors are tuples of factor colors (mixed-radix ids,
// most significant factor first), a tuple is admissible iff it is
// coordinatewise admissible in every factor. Labels are "(a|b|...)".
// If `decode` is given, row c lists the factor color ids of product color c.
Palette product(const std::vector<Palette>& ps,
                std::vector<std::vector<int>>* decode = nullptr);

// One symmetrized color: a base color of the underlying palette tagged
// with a pattern permutation of degree k-1.
struct SymColor {
  int base = 0;
  Permutation pattern;
};

// Color id layout of the symmetrization: base * (k-1)! + lex rank of the
// pattern. Labels are "<base label>^<pattern digits>".
int sym_color_id(const Palette& p, int base, const Permutation& pattern);

// Symmetrization: colors are pairs (base color, pattern in S_{k-1}); the
// admissible tuples are all images of base tuples under the S_k action
//   tau . (c_1,...,c_k) = (c_{tau(1)} tagged d_1 tau, ..., c_{tau(k)} tagged d_k tau)
// where d_i tau is the i-th boundary pattern of tau. If `decode` is given,
// entry c describes sym color c.
Palette symmetrize(const Palette& p, std::vector<SymColor>* decode = nullptr);

// Colors occurring at 1-based coordinate `coord` of some tuple, ascending.
std::vector<int> support_set(const Palette& p, int coord);

// Digraph on the colors with an arc a->b for every tuple having a at
// 1-based coordinate i and b at coordinate j.
Digraph coordinate_digraph(const Palette& p, int i, int j);

struct CanonicalForm {
  Palette palette;
  std::vector<int> relabeling;  // relabeling[old id] = new id
};

// Minimum over all color relabelings of the sorted tuple list; two
// palettes are isomorphic iff their canonical forms have equal tuples.
// Guarded by kMaxCanonicalColors (full enumeration of relabelings).
CanonicalForm canonical_form(const Palette& p);

}  // namespace palcheck
