#pragma once

// 1-indexed permutations and the pattern operators used by palette
// symmetrization. A Permutation tau of degree r maps positions 1..r to
// values 1..r; images[i-1] = tau(i). The 1-indexed convention matches the
// two-row matrix notation the pattern operators are defined with.

#include <cstdint>
#include <string>
#include <vector>

namespace palcheck {

struct Permutation {
  std::vector<int> images;  // images[i-1] = tau(i), a bijection on 1..r

  int degree() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[static_cast<std::size_t>(i - 1)]; }

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return images < o.images; }

  bool is_valid() const;
  static Permutation identity(int r);

  // 0-based rank in the lexicographic order of all degree-r permutations.
  // Used to pack symmetrized color ids densely; degree <= 20.
  uint64_t lex_rank() const;
  static Permutation from_lex_rank(int degree, uint64_t rank);

  // Compact rendering "312" (degree <= 9), used in color labels.
  std::string to_digits() const;
};

// Pattern of a tuple of pairwise-distinct integers: position i maps to the
// rank of xs[i-1] among the values. (1,2,3) -> identity; (2,1,3) -> the
// transposition of 1,2; (5,9,2) has the same pattern as (2,3,1).
// Throws InputError on repeated entries.
Permutation alpha_star(const std::vector<long long>& xs);

// Pattern of (tau(1),...,tau(r)) with the i-th entry deleted; degree r-1.
// Throws InputError when i is out of range.
Permutation boundary(const Permutation& tau, int i);

// Composition (a . b)(i) = a(b(i)); degrees must match. Boundaries obey
// the chain rule boundary(a . b, i) = boundary(a, b(i)) . boundary(b, i).
Permutation compose(const Permutation& a, const Permutation& b);

// All permutations of degree r in lexicographic order.
std::vector<Permutation> all_permutations(int r);

uint64_t factorial(int r);  // r <= 20

}  // namespace palcheck
