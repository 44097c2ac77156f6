#pragma once

// Palette homomorphisms: maps f from the colors of src to the colors of
// dst such that every admissible src tuple maps coordinatewise to an
// admissible dst tuple.

#include <cstdint>
#include <vector>

#include "palcheck/palette.hpp"
#include "palcheck/rational.hpp"

namespace palcheck {

enum class HomStatus { witness, none, unknown };

struct HomResult {
  HomStatus status = HomStatus::none;
  std::vector<int> map;     // map[src color] = dst color (when witness)
  uint64_t nodes = 0;       // search nodes expanded
  BigInt search_space = 0;  // |C_dst| ^ |C_src|, the nominal search space
};

// True iff `map` (total on src colors) sends every src tuple to a dst tuple.
bool is_homomorphism(const Palette& src, const Palette& dst,
                     const std::vector<int>& map);

// Backtracking search. Colors not occurring in any src tuple are
// unconstrained and mapped to dst color 0. Variable order: decreasing
// number of tuple occurrences, ties by smaller color id; values ascending,
// so the witness is deterministic. `node_budget` 0 means unlimited;
// exhausting it yields status unknown.
HomResult hom_exists(const Palette& src, const Palette& dst,
                     uint64_t node_budget = 0);

// Exhaustive oracle over all |C_dst|^|C_src| total maps, in lexicographic
// order of the map vector. Only for small instances (guarded).
HomResult hom_exists_naive(const Palette& src, const Palette& dst);

}  // namespace palcheck
