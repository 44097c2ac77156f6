#pragma once

// Palette colorability of ordered and unordered k-graphs.
//
// Given a linear order on the vertices and a coloring phi of the shadow
// ((k-1)-subsets of edges), an edge e with vertices v_1 < ... < v_k in the
// order is happy when (phi(e minus v_1), ..., phi(e minus v_k)) is an
// admissible palette tuple. An ordered graph is colorable when some phi
// makes every edge happy; an unordered graph is colorable when some order
// works.

#include <cstdint>
#include <optional>
#include <vector>

#include "palcheck/kgraph.hpp"
#include "palcheck/palette.hpp"

namespace palcheck {

enum class Decision { witness, none, unknown };

struct ShadowColoring {
  std::vector<std::vector<int>> sets;  // sorted (k-1)-sets, lex order
  std::vector<int> colors;             // parallel to sets
  int color_of(const std::vector<int>& set) const;  // -1 when absent
};

struct OrderedColorResult {
  Decision decision = Decision::none;
  ShadowColoring coloring;  // when witness
  uint64_t nodes = 0;
};

// Order = vertex ids listed from smallest to largest in the linear order.
// The witness coloring is the lexicographically least one (shadow sets in
// lex order, colors ascending). Budget 0 = unlimited.
OrderedColorResult is_ordered_colorable(const KGraph& g,
                                        const std::vector<int>& order,
                                        const Palette& p,
                                        uint64_t node_budget = 0);

// Validates a claimed witness.
bool check_ordered_coloring(const KGraph& g, const std::vector<int>& order,
                            const Palette& p, const ShadowColoring& phi);

struct ColorResult {
  Decision decision = Decision::none;
  std::vector<int> order;    // when witness
  ShadowColoring coloring;   // when witness
  uint64_t orders_tried = 0; // CSP runs performed
  uint64_t nodes = 0;        // total CSP nodes
};

// Existential colorability over all vertex orders. Enumerates orders in
// lexicographic order, restricted to orbit representatives under the
// automorphism group of g, and handles an order and its reversal together
// (reversing the order is equivalent to reversing the palette). For
// n > 9 an explicit node budget is required; exhausting it gives unknown.
ColorResult is_colorable(const KGraph& g, const Palette& p,
                         std::optional<uint64_t> node_budget = std::nullopt);

// Reference oracle: every vertex order, no pruning. Small n only.
ColorResult is_colorable_full_enumeration(const KGraph& g, const Palette& p);

struct FamilyColorResult {
  Decision decision = Decision::none;
  int witness_member = -1;  // index into the family when witness
  ColorResult member_result;
};

// Witness iff some member of the family is colorable.
FamilyColorResult is_family_colorable(
    const std::vector<KGraph>& family, const Palette& p,
    std::optional<uint64_t> node_budget = std::nullopt);

// Transfers a valid shadow coloring of (g, from_order) over the
// symmetrization of p to any other order: each shadow set's color keeps
// its base and composes its pattern with the set's relative pattern
// between the two orders. `sym` and `decode` must come from symmetrize(p).
ShadowColoring transfer_coloring(const KGraph& g,
                                 const std::vector<int>& from_order,
                                 const std::vector<int>& to_order,
                                 const Palette& p, const Palette& sym,
                                 const std::vector<SymColor>& decode,
                                 const ShadowColoring& phi);

// Lifts a coloring over p to one over symmetrize(p) at the same order:
// every color is tagged with the identity pattern.
ShadowColoring lift_to_symmetrization(const Palette& p,
                                      const ShadowColoring& phi);

struct TransferCheck {
  bool precondition_ok = false;  // g was p-colorable (else vacuous)
  int trials = 0;                // random orders requested
  int checked = 0;               // orders actually verified
  bool pass = true;              // every assertion held
  std::vector<int> violating_order;  // first failure, when pass is false
};

// Verifies on random orders that a colorable graph stays colorable over
// the symmetrized palette under EVERY order: takes a witness for (g, p),
// lifts it, transfers it to each random order via the pattern twist, and
// checks both the transferred witness and a direct solve.
TransferCheck check_symmetrization_transfer(const KGraph& g,
                                            const Palette& p, int trials,
                                            uint64_t seed);

}  // namespace palcheck
