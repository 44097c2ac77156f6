#include "palcheck/palette.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "palcheck/errors.hpp"

namespace palcheck {

void Palette::canonicalize() {
  std::sort(tuples.begin(), tuples.end());
  tuples.erase(std::unique(tuples.begin(), tuples.end()), tuples.end());
}

void Palette::validate() const {
  if (k < 2) throw InputError("palette: k must be at least 2");
  if (k > 9) throw InputError("palette: k larger than 9 is not supported");
  if (num_colors < 1) throw InputError("palette: color set must be nonempty");
  if (static_cast<int>(labels.size()) != num_colors) {
    throw InputError("palette: label count does not match num_colors");
  }
  std::unordered_set<std::string> seen;
  for (const std::string& l : labels) {
    if (l.empty()) throw InputError("palette: empty color label");
    if (!seen.insert(l).second) {
      throw InputError("palette: duplicate color label '" + l + "'");
    }
  }
  for (size_t i = 0; i < tuples.size(); ++i) {
    if (static_cast<int>(tuples[i].size()) != k) {
      throw InputError("palette: tuple " + std::to_string(i) +
                       " does not have k entries");
    }
    for (const int c : tuples[i]) {
      if (c < 0 || c >= num_colors) {
        throw InputError("palette: tuple " + std::to_string(i) +
                         " has a color id out of range");
      }
    }
    if (i > 0 && !(tuples[i - 1] < tuples[i])) {
      throw InputError("palette: tuples not sorted/deduplicated (index " +
                       std::to_string(i) + ")");
    }
  }
}

bool Palette::has_tuple(const std::vector<int>& t) const {
  return std::binary_search(tuples.begin(), tuples.end(), t);
}

Palette Palette::make(int k, int num_colors,
                      std::vector<std::vector<int>> tuples) {
  Palette p;
  p.k = k;
  p.num_colors = num_colors;
  p.labels.reserve(static_cast<size_t>(num_colors));
  for (int c = 0; c < num_colors; ++c) {
    p.labels.push_back("c" + std::to_string(c));
  }
  p.tuples = std::move(tuples);
  p.canonicalize();
  p.validate();
  return p;
}

Rational density(const Palette& p) {
  p.validate();
  return Rational(BigInt(p.tuples.size()),
                  ipow(BigInt(p.num_colors), static_cast<unsigned>(p.k)));
}

Palette reverse_palette(const Palette& p) {
  Palette r = p;
  for (auto& t : r.tuples) std::reverse(t.begin(), t.end());
  r.canonicalize();
  return r;
}

Palette product(const std::vector<Palette>& ps,
                std::vector<std::vector<int>>* decode) {
  if (ps.empty()) throw InputError("product: needs at least one factor");
  const int k = ps[0].k;
  long long ncolors = 1;
  long long ntuples = 1;
  for (const Palette& p : ps) {
    p.validate();
    if (p.k != k) throw InputError("product: factors have different k");
    ncolors *= p.num_colors;
    if (ncolors > kMaxProductColors) {
      throw InfeasibleError("product: more than " +
                            std::to_string(kMaxProductColors) +
                            " colors; refusing");
    }
    ntuples *= static_cast<long long>(p.tuples.size());
    if (ntuples > kMaxProductTuples) {
      throw InfeasibleError("product: more than " +
                            std::to_string(kMaxProductTuples) +
                            " tuple combinations; refusing");
    }
  }

  Palette out;
  out.k = k;
  out.num_colors = static_cast<int>(ncolors);
  out.labels.reserve(static_cast<size_t>(ncolors));
  if (decode) {
    decode->clear();
    decode->reserve(static_cast<size_t>(ncolors));
  }
  // Mixed-radix enumeration of color combinations, first factor most
  // significant, so id = ((c_1 * n_2 + c_2) * n_3 + c_3) ...
  std::vector<int> digit(ps.size(), 0);
  for (long long id = 0; id < ncolors; ++id) {
    std::string label = "(";
    for (size_t f = 0; f < ps.size(); ++f) {
      if (f > 0) label += "|";
      label += ps[f].labels[static_cast<size_t>(digit[f])];
    }
    label += ")";
    out.labels.push_back(std::move(label));
    if (decode) decode->push_back(digit);
    for (size_t f = ps.size(); f-- > 0;) {
      if (++digit[f] < ps[f].num_colors) break;
      digit[f] = 0;
    }
  }

  // Cartesian product of the factor tuple lists.
  if (ntuples > 0) {
    std::vector<size_t> pick(ps.size(), 0);
    std::vector<int> combined(static_cast<size_t>(k));
    out.tuples.reserve(static_cast<size_t>(ntuples));
    for (long long it = 0; it < ntuples; ++it) {
      for (int pos = 0; pos < k; ++pos) {
        long long id = 0;
        for (size_t f = 0; f < ps.size(); ++f) {
          id = id * ps[f].num_colors +
               ps[f].tuples[pick[f]][static_cast<size_t>(pos)];
        }
        combined[static_cast<size_t>(pos)] = static_cast<int>(id);
      }
      out.tuples.push_back(combined);
      for (size_t f = ps.size(); f-- > 0;) {
        if (++pick[f] < ps[f].tuples.size()) break;
        pick[f] = 0;
      }
    }
  }
  out.canonicalize();
  out.validate();
  return out;
}

int sym_color_id(const Palette& p, int base, const Permutation& pattern) {
  if (pattern.degree() != p.k - 1) {
    throw InputError("sym_color_id: pattern degree must be k-1");
  }
  if (base < 0 || base >= p.num_colors) {
    throw InputError("sym_color_id: base color out of range");
  }
  const uint64_t block = factorial(p.k - 1);
  return static_cast<int>(static_cast<uint64_t>(base) * block +
                          pattern.lex_rank());
}

Palette symmetrize(const Palette& p, std::vector<SymColor>* decode) {
  p.validate();
  const uint64_t block = factorial(p.k - 1);
  const long long ncolors = static_cast<long long>(p.num_colors) *
                            static_cast<long long>(block);
  if (ncolors > kMaxProductColors) {
    throw InfeasibleError("symmetrize: more than " +
                          std::to_string(kMaxProductColors) +
                          " colors; refusing");
  }
  const std::vector<Permutation> patterns = all_permutations(p.k - 1);

  Palette out;
  out.k = p.k;
  out.num_colors = static_cast<int>(ncolors);
  out.labels.reserve(static_cast<size_t>(ncolors));
  if (decode) {
    decode->clear();
    decode->reserve(static_cast<size_t>(ncolors));
  }
  for (int base = 0; base < p.num_colors; ++base) {
    for (const Permutation& pat : patterns) {
      out.labels.push_back(p.labels[static_cast<size_t>(base)] + "^" +
                           pat.to_digits());
      if (decode) decode->push_back(SymColor{base, pat});
    }
  }

  // Precompute, for every tau in S_k, its k boundary patterns.
  const std::vector<Permutation> taus = all_permutations(p.k);
  std::vector<std::vector<Permutation>> bounds(taus.size());
  for (size_t t = 0; t < taus.size(); ++t) {
    bounds[t].reserve(static_cast<size_t>(p.k));
    for (int i = 1; i <= p.k; ++i) {
      bounds[t].push_back(boundary(taus[t], i));
    }
  }

  std::set<std::vector<int>> acc;
  std::vector<int> image(static_cast<size_t>(p.k));
  for (const auto& tup : p.tuples) {
    for (size_t t = 0; t < taus.size(); ++t) {
      for (int i = 1; i <= p.k; ++i) {
        const int base = tup[static_cast<size_t>(taus[t](i) - 1)];
        image[static_cast<size_t>(i - 1)] =
            sym_color_id(p, base, bounds[t][static_cast<size_t>(i - 1)]);
      }
      acc.insert(image);
    }
  }
  out.tuples.assign(acc.begin(), acc.end());
  out.validate();
  return out;
}

std::vector<int> support_set(const Palette& p, int coord) {
  if (coord < 1 || coord > p.k) {
    throw InputError("support_set: coordinate out of range");
  }
  std::set<int> s;
  for (const auto& t : p.tuples) s.insert(t[static_cast<size_t>(coord - 1)]);
  return std::vector<int>(s.begin(), s.end());
}

Digraph coordinate_digraph(const Palette& p, int i, int j) {
  if (i < 1 || i > p.k || j < 1 || j > p.k || i == j) {
    throw InputError("coordinate_digraph: invalid coordinate pair");
  }
  Digraph d;
  d.n = p.num_colors;
  d.arcs.reserve(p.tuples.size());
  for (const auto& t : p.tuples) {
    d.arcs.emplace_back(t[static_cast<size_t>(i - 1)],
                        t[static_cast<size_t>(j - 1)]);
  }
  d.canonicalize();
  return d;
}

CanonicalForm canonical_form(const Palette& p) {
  p.validate();
  if (p.num_colors > kMaxCanonicalColors) {
    throw InfeasibleError(
        "canonical_form: more than " + std::to_string(kMaxCanonicalColors) +
        " colors; full relabeling enumeration refused");
  }
  std::vector<int> perm(static_cast<size_t>(p.num_colors));
  for (int c = 0; c < p.num_colors; ++c) perm[static_cast<size_t>(c)] = c;

  std::optional<std::vector<std::vector<int>>> best;
  std::vector<int> best_perm = perm;
  std::vector<std::vector<int>> relabeled;
  do {
    relabeled = p.tuples;
    for (auto& t : relabeled) {
      for (int& c : t) c = perm[static_cast<size_t>(c)];
    }
    std::sort(relabeled.begin(), relabeled.end());
    if (!best || relabeled < *best) {
      best = relabeled;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  CanonicalForm out;
  out.palette = p;
  out.palette.tuples = *best;
  out.relabeling = best_perm;
  // Labels follow the colors: new color best_perm[c] shows old label c.
  for (int c = 0; c < p.num_colors; ++c) {
    out.palette.labels[static_cast<size_t>(best_perm[static_cast<size_t>(c)])] =
        p.labels[static_cast<size_t>(c)];
  }
  return out;
}

}  // namespace palcheck
