#include "palcheck/colorability.hpp"

#include <algorithm>
#include <map>

#include "palcheck/csp.hpp"
#include "palcheck/errors.hpp"
#include "palcheck/rng.hpp"

namespace palcheck {

int ShadowColoring::color_of(const std::vector<int>& set) const {
  const auto it = std::lower_bound(sets.begin(), sets.end(), set);
  if (it == sets.end() || *it != set) return -1;
  return colors[static_cast<size_t>(it - sets.begin())];
}

namespace {

void validate_order(const KGraph& g, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != g.n) {
    throw InputError("order: must list every vertex exactly once");
  }
  std::vector<bool> seen(static_cast<size_t>(g.n), false);
  for (const int v : order) {
    if (v < 0 || v >= g.n || seen[static_cast<size_t>(v)]) {
      throw InputError("order: must list every vertex exactly once");
    }
    seen[static_cast<size_t>(v)] = true;
  }
}

// Builds the CSP: one variable per shadow set, one table constraint per
// edge, scopes arranged by the vertex order.
struct ColorCsp {
  std::vector<std::vector<int>> sets;
  std::vector<std::vector<int>> domains;
  std::vector<TableConstraint> constraints;
  std::vector<int> var_order;

  ColorCsp(const KGraph& g, const std::vector<int>& order, const Palette& p) {
    sets = shadow(g);
    std::vector<int> rank(static_cast<size_t>(g.n), 0);
    for (size_t pos = 0; pos < order.size(); ++pos) {
      rank[static_cast<size_t>(order[pos])] = static_cast<int>(pos);
    }
    std::vector<int> full(static_cast<size_t>(p.num_colors));
    for (int c = 0; c < p.num_colors; ++c) full[static_cast<size_t>(c)] = c;
    domains.assign(sets.size(), full);

    constraints.reserve(g.edges.size());
    std::vector<int> by_rank;
    for (const auto& e : g.edges) {
      by_rank = e;
      std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
        return rank[static_cast<size_t>(a)] < rank[static_cast<size_t>(b)];
      });
      std::vector<int> scope;
      scope.reserve(static_cast<size_t>(g.k));
      std::vector<int> s;
      for (int j = 0; j < g.k; ++j) {
        s.clear();
        for (const int v : e) {
          if (v != by_rank[static_cast<size_t>(j)]) s.push_back(v);
        }
        const auto it = std::lower_bound(sets.begin(), sets.end(), s);
        scope.push_back(static_cast<int>(it - sets.begin()));
      }
      constraints.push_back(TableConstraint{std::move(scope), &p.tuples});
    }

    var_order.resize(sets.size());
    for (size_t i = 0; i < sets.size(); ++i) {
      var_order[i] = static_cast<int>(i);
    }
  }
};

}  // namespace

OrderedColorResult is_ordered_colorable(const KGraph& g,
                                        const std::vector<int>& order,
                                        const Palette& p,
                                        uint64_t node_budget) {
  g.validate();
  p.validate();
  validate_order(g, order);
  if (g.k != p.k) throw InputError("is_ordered_colorable: arity mismatch");

  const ColorCsp csp(g, order, p);
  const CspResult res =
      solve_table_csp(static_cast<int>(csp.sets.size()), csp.domains,
                      csp.constraints, csp.var_order, node_budget);
  OrderedColorResult out;
  out.nodes = res.nodes;
  switch (res.status) {
    case CspStatus::witness:
      out.decision = Decision::witness;
      out.coloring.sets = csp.sets;
      out.coloring.colors = res.assignment;
      break;
    case CspStatus::none:
      out.decision = Decision::none;
      break;
    case CspStatus::unknown:
      out.decision = Decision::unknown;
      break;
  }
  return out;
}

bool check_ordered_coloring(const KGraph& g, const std::vector<int>& order,
                            const Palette& p, const ShadowColoring& phi) {
  g.validate();
  p.validate();
  validate_order(g, order);
  if (g.k != p.k) throw InputError("check_ordered_coloring: arity mismatch");
  std::vector<int> rank(static_cast<size_t>(g.n), 0);
  for (size_t pos = 0; pos < order.size(); ++pos) {
    rank[static_cast<size_t>(order[pos])] = static_cast<int>(pos);
  }
  std::vector<int> by_rank, s, tuple;
  for (const auto& e : g.edges) {
    by_rank = e;
    std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
      return rank[static_cast<size_t>(a)] < rank[static_cast<size_t>(b)];
    });
    tuple.clear();
    for (int j = 0; j < g.k; ++j) {
      s.clear();
      for (const int v : e) {
        if (v != by_rank[static_cast<size_t>(j)]) s.push_back(v);
      }
      const int c = phi.color_of(s);
      if (c < 0 || c >= p.num_colors) return false;
      tuple.push_back(c);
    }
    if (!p.has_tuple(tuple)) return false;
  }
  return true;
}

namespace {

// Lexicographically least image of `seq` under the given vertex maps.
std::vector<int> orbit_key(const std::vector<int>& seq,
                           const std::vector<std::vector<int>>& auts) {
  std::vector<int> best = seq;
  std::vector<int> img(seq.size());
  for (const auto& a : auts) {
    for (size_t i = 0; i < seq.size(); ++i) {
      img[i] = a[static_cast<size_t>(seq[i])];
    }
    if (img < best) best = img;
  }
  return best;
}

}  // namespace

ColorResult is_colorable(const KGraph& g, const Palette& p,
                         std::optional<uint64_t> node_budget) {
  g.validate();
  p.validate();
  if (g.k != p.k) throw InputError("is_colorable: arity mismatch");
  if (g.n > 9 && !node_budget.has_value()) {
    throw InputError(
        "is_colorable: n > 9 requires an explicit node budget");
  }

  std::vector<std::vector<int>> auts;
  if (g.n <= 9) {
    auts = automorphisms(g);
  } else {
    std::vector<int> id(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) id[static_cast<size_t>(v)] = v;
    auts.push_back(std::move(id));
  }

  const Palette rev = reverse_palette(p);
  uint64_t remaining = node_budget.value_or(0);
  ColorResult out;

  std::vector<int> seq(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) seq[static_cast<size_t>(v)] = v;
  std::vector<int> rseq;
  bool exhausted = false;
  do {
    // Only orbit representatives under Aut(g); an order and its reverse
    // are handled together (reverse order == reverse palette), so skip a
    // representative whose reversal's representative came earlier.
    if (orbit_key(seq, auts) != seq) continue;
    rseq.assign(seq.rbegin(), seq.rend());
    const std::vector<int> rkey = orbit_key(rseq, auts);
    if (rkey < seq) continue;

    for (const bool reversed : {false, true}) {
      if (reversed && rkey == seq && p == rev) break;  // same instance
      const Palette& pal = reversed ? rev : p;
      const uint64_t budget = node_budget.has_value() ? remaining : 0;
      if (node_budget.has_value() && budget == 0) {
        exhausted = true;
        break;
      }
      const OrderedColorResult r = is_ordered_colorable(g, seq, pal, budget);
      ++out.orders_tried;
      out.nodes += r.nodes;
      if (node_budget.has_value()) {
        remaining = (r.nodes >= remaining) ? 0 : remaining - r.nodes;
      }
      if (r.decision == Decision::witness) {
        out.decision = Decision::witness;
        // A coloring for (seq, reverse(p)) is a coloring of the reversed
        // order for p, with the same shadow coloring.
        out.order = reversed ? rseq : seq;
        out.coloring = r.coloring;
        if (!check_ordered_coloring(g, out.order, p, out.coloring)) {
          throw std::logic_error("is_colorable: witness failed validation");
        }
        return out;
      }
      if (r.decision == Decision::unknown) {
        exhausted = true;
        break;
      }
    }
  } while (!exhausted && std::next_permutation(seq.begin(), seq.end()));

  out.decision = exhausted ? Decision::unknown : Decision::none;
  return out;
}

ColorResult is_colorable_full_enumeration(const KGraph& g, const Palette& p) {
  g.validate();
  p.validate();
  if (g.k != p.k) throw InputError("is_colorable: arity mismatch");
  if (g.n > 7) {
    throw InfeasibleError(
        "is_colorable_full_enumeration: n > 7 refused (reference oracle)");
  }
  ColorResult out;
  std::vector<int> seq(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) seq[static_cast<size_t>(v)] = v;
  do {
    const OrderedColorResult r = is_ordered_colorable(g, seq, p);
    ++out.orders_tried;
    out.nodes += r.nodes;
    if (r.decision == Decision::witness) {
      out.decision = Decision::witness;
      out.order = seq;
      out.coloring = r.coloring;
      return out;
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  out.decision = Decision::none;
  return out;
}

FamilyColorResult is_family_colorable(
    const std::vector<KGraph>& family, const Palette& p,
    std::optional<uint64_t> node_budget) {
  FamilyColorResult out;
  bool any_unknown = false;
  for (size_t i = 0; i < family.size(); ++i) {
    const ColorResult r = is_colorable(family[i], p, node_budget);
    if (r.decision == Decision::witness) {
      out.decision = Decision::witness;
      out.witness_member = static_cast<int>(i);
      out.member_result = r;
      return out;
    }
    if (r.decision == Decision::unknown) any_unknown = true;
  }
  out.decision = any_unknown ? Decision::unknown : Decision::none;
  return out;
}

ShadowColoring transfer_coloring(const KGraph& g,
                                 const std::vector<int>& from_order,
                                 const std::vector<int>& to_order,
                                 const Palette& p, const Palette& sym,
                                 const std::vector<SymColor>& decode,
                                 const ShadowColoring& phi) {
  validate_order(g, from_order);
  validate_order(g, to_order);
  if (static_cast<int>(decode.size()) != sym.num_colors) {
    throw InputError("transfer_coloring: decode does not match sym palette");
  }
  std::vector<int> from_rank(static_cast<size_t>(g.n), 0);
  std::vector<int> to_rank(static_cast<size_t>(g.n), 0);
  for (size_t pos = 0; pos < from_order.size(); ++pos) {
    from_rank[static_cast<size_t>(from_order[pos])] = static_cast<int>(pos);
  }
  for (size_t pos = 0; pos < to_order.size(); ++pos) {
    to_rank[static_cast<size_t>(to_order[pos])] = static_cast<int>(pos);
  }

  ShadowColoring out;
  out.sets = phi.sets;
  out.colors.reserve(phi.colors.size());
  std::vector<int> elems;
  std::vector<long long> old_ranks;
  for (size_t i = 0; i < phi.sets.size(); ++i) {
    const int c = phi.colors[i];
    if (c < 0 || c >= static_cast<int>(decode.size())) {
      throw InputError("transfer_coloring: color out of range");
    }
    // The set's elements in to_order, each replaced by its from_order
    // rank; the pattern of that list is the twist.
    elems = phi.sets[i];
    std::sort(elems.begin(), elems.end(), [&](int a, int b) {
      return to_rank[static_cast<size_t>(a)] < to_rank[static_cast<size_t>(b)];
    });
    old_ranks.clear();
    for (const int v : elems) {
      old_ranks.push_back(from_rank[static_cast<size_t>(v)]);
    }
    const Permutation twist = alpha_star(old_ranks);
    const SymColor& sc = decode[static_cast<size_t>(c)];
    out.colors.push_back(
        sym_color_id(p, sc.base, compose(sc.pattern, twist)));
  }
  return out;
}

ShadowColoring lift_to_symmetrization(const Palette& p,
                                      const ShadowColoring& phi) {
  ShadowColoring out;
  out.sets = phi.sets;
  out.colors.reserve(phi.colors.size());
  const Permutation id = Permutation::identity(p.k - 1);
  for (const int c : phi.colors) {
    out.colors.push_back(sym_color_id(p, c, id));
  }
  return out;
}

TransferCheck check_symmetrization_transfer(const KGraph& g,
                                            const Palette& p, int trials,
                                            uint64_t seed) {
  g.validate();
  p.validate();
  TransferCheck out;
  out.trials = trials;

  const ColorResult base = is_colorable(g, p);
  if (base.decision != Decision::witness) return out;  // vacuous
  out.precondition_ok = true;

  std::vector<SymColor> decode;
  const Palette sym = symmetrize(p, &decode);
  // A p-coloring is a sym-coloring with identity patterns: base tuples
  // appear in the symmetrization tagged by the identity action.
  const ShadowColoring lifted = lift_to_symmetrization(p, base.coloring);
  if (!check_ordered_coloring(g, base.order, sym, lifted)) {
    out.pass = false;
    out.violating_order = base.order;
    return out;
  }

  CounterRng rng(seed);
  std::vector<int> order(static_cast<size_t>(g.n));
  for (int v = 0; v < g.n; ++v) order[static_cast<size_t>(v)] = v;
  for (int t = 0; t < trials; ++t) {
    rng.shuffle(order);
    const ShadowColoring moved =
        transfer_coloring(g, base.order, order, p, sym, decode, lifted);
    const bool direct =
        is_ordered_colorable(g, order, sym).decision == Decision::witness;
    if (!check_ordered_coloring(g, order, sym, moved) || !direct) {
      out.pass = false;
      if (out.violating_order.empty()) out.violating_order = order;
      continue;
    }
    ++out.checked;
  }
  return out;
}

}  // namespace palcheck
