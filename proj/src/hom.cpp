#include "palcheck/hom.hpp"

#include <algorithm>

#include "palcheck/csp.hpp"
#include "palcheck/errors.hpp"

namespace palcheck {

bool is_homomorphism(const Palette& src, const Palette& dst,
                     const std::vector<int>& map) {
  if (src.k != dst.k) throw InputError("is_homomorphism: arity mismatch");
  if (static_cast<int>(map.size()) != src.num_colors) {
    throw InputError("is_homomorphism: map is not total on src colors");
  }
  for (const int c : map) {
    if (c < 0 || c >= dst.num_colors) {
      throw InputError("is_homomorphism: map value out of range");
    }
  }
  std::vector<int> image(static_cast<size_t>(src.k));
  for (const auto& t : src.tuples) {
    for (int i = 0; i < src.k; ++i) {
      image[static_cast<size_t>(i)] =
          map[static_cast<size_t>(t[static_cast<size_t>(i)])];
    }
    if (!dst.has_tuple(image)) return false;
  }
  return true;
}

HomResult hom_exists(const Palette& src, const Palette& dst,
                     uint64_t node_budget) {
  src.validate();
  dst.validate();
  if (src.k != dst.k) throw InputError("hom_exists: arity mismatch");

  HomResult out;
  out.search_space = ipow(BigInt(dst.num_colors),
                          static_cast<unsigned>(src.num_colors));

  // Count occurrences; colors missing from every tuple are unconstrained.
  std::vector<int> occurrences(static_cast<size_t>(src.num_colors), 0);
  for (const auto& t : src.tuples) {
    for (const int c : t) ++occurrences[static_cast<size_t>(c)];
  }

  // Initial domains: the intersection of the dst coordinate supports over
  // all coordinates where the color occurs.
  std::vector<std::vector<int>> coord_support(static_cast<size_t>(dst.k));
  for (int i = 1; i <= dst.k; ++i) {
    coord_support[static_cast<size_t>(i - 1)] = support_set(dst, i);
  }
  std::vector<std::vector<int>> domains(
      static_cast<size_t>(src.num_colors));
  {
    std::vector<int> full(static_cast<size_t>(dst.num_colors));
    for (int c = 0; c < dst.num_colors; ++c) full[static_cast<size_t>(c)] = c;
    for (int c = 0; c < src.num_colors; ++c) {
      domains[static_cast<size_t>(c)] = full;
    }
  }
  for (const auto& t : src.tuples) {
    for (int i = 0; i < src.k; ++i) {
      auto& dom = domains[static_cast<size_t>(t[static_cast<size_t>(i)])];
      const auto& sup = coord_support[static_cast<size_t>(i)];
      std::vector<int> narrowed;
      narrowed.reserve(dom.size());
      for (const int v : dom) {
        if (std::binary_search(sup.begin(), sup.end(), v)) {
          narrowed.push_back(v);
        }
      }
      dom = std::move(narrowed);
    }
  }

  std::vector<TableConstraint> constraints;
  constraints.reserve(src.tuples.size());
  for (const auto& t : src.tuples) {
    constraints.push_back(TableConstraint{t, &dst.tuples});
  }

  // Constrained colors first, by decreasing occurrence count (ties: lower
  // id); unconstrained colors trail and are fixed to dst color 0 by their
  // singleton position in the order with full domain -> value 0 first.
  std::vector<int> var_order(static_cast<size_t>(src.num_colors));
  for (int c = 0; c < src.num_colors; ++c) var_order[static_cast<size_t>(c)] = c;
  std::stable_sort(var_order.begin(), var_order.end(), [&](int a, int b) {
    return occurrences[static_cast<size_t>(a)] >
           occurrences[static_cast<size_t>(b)];
  });

  const CspResult res = solve_table_csp(src.num_colors, domains, constraints,
                                        var_order, node_budget);
  out.nodes = res.nodes;
  switch (res.status) {
    case CspStatus::witness: {
      out.status = HomStatus::witness;
      out.map = res.assignment;
      break;
    }
    case CspStatus::none:
      out.status = HomStatus::none;
      break;
    case CspStatus::unknown:
      out.status = HomStatus::unknown;
      break;
  }
  return out;
}

HomResult hom_exists_naive(const Palette& src, const Palette& dst) {
  src.validate();
  dst.validate();
  if (src.k != dst.k) throw InputError("hom_exists_naive: arity mismatch");

  HomResult out;
  out.search_space = ipow(BigInt(dst.num_colors),
                          static_cast<unsigned>(src.num_colors));
  if (out.search_space > BigInt(100'000'000)) {
    throw InfeasibleError("hom_exists_naive: search space too large");
  }

  std::vector<int> map(static_cast<size_t>(src.num_colors), 0);
  for (;;) {
    ++out.nodes;
    if (is_homomorphism(src, dst, map)) {
      out.status = HomStatus::witness;
      out.map = map;
      return out;
    }
    // Odometer increment in lexicographic order of the map vector.
    int pos = src.num_colors - 1;
    while (pos >= 0 && map[static_cast<size_t>(pos)] == dst.num_colors - 1) {
      map[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++map[static_cast<size_t>(pos)];
  }
  out.status = HomStatus::none;
  return out;
}

}  // namespace palcheck
