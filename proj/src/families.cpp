#include "palcheck/families.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "palcheck/errors.hpp"

namespace palcheck {

namespace {

// Incremental palette assembly with labeled colors. fresh() mints a new
// filler color, guaranteed distinct from everything else in the palette.
class Builder {
 public:
  explicit Builder(int k) : k_(k) {}

  int color(const std::string& label) {
    auto it = ids_.find(label);
    if (it != ids_.end()) return it->second;
    const int id = static_cast<int>(labels_.size());
    labels_.push_back(label);
    ids_.emplace(label, id);
    return id;
  }

  int fresh() { return color("f" + std::to_string(++fresh_counter_)); }

  void tuple(std::vector<int> t) { tuples_.push_back(std::move(t)); }

  Palette finish() {
    Palette p;
    p.k = k_;
    p.num_colors = static_cast<int>(labels_.size());
    p.labels = std::move(labels_);
    p.tuples = std::move(tuples_);
    p.canonicalize();
    p.validate();
    return p;
  }

 private:
  int k_;
  std::vector<std::string> labels_;
  std::map<std::string, int> ids_;
  std::vector<std::vector<int>> tuples_;
  int fresh_counter_ = 0;
};

// Calls fn on every word of [0,base)^len in lexicographic order.
template <typename Fn>
void for_each_word(int base, int len, Fn&& fn) {
  std::vector<int> word(static_cast<size_t>(len), 0);
  while (true) {
    fn(const_cast<const std::vector<int>&>(word));
    int pos = len - 1;
    while (pos >= 0 && word[static_cast<size_t>(pos)] == base - 1) {
      word[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return;
    ++word[static_cast<size_t>(pos)];
  }
}

void require_k(FamilyId id, int k, int lo, int hi = 9) {
  if (k < lo || k > hi) {
    throw InputError("family " + family_id_string(id) + ": k=" +
                     std::to_string(k) + " outside supported range [" +
                     std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
}

void require_r(FamilyId id, int r) {
  if (r < 2) {
    throw InputError("family " + family_id_string(id) +
                     ": r must be at least 2, got " + std::to_string(r));
  }
}

void guard_tuple_count(FamilyId id, const BigInt& expected) {
  if (expected > kMaxProductTuples) {
    throw InfeasibleError("family " + family_id_string(id) + " would have " +
                          expected.str() + " tuples, above the ceiling of " +
                          std::to_string(kMaxProductTuples));
  }
}

// Target with tuple set {x in [r]^k : x_1 != x_2}.
Palette frac_r_target(int k, int r) {
  guard_tuple_count(FamilyId::frac_r, ipow(BigInt(r), static_cast<unsigned>(k)));
  std::vector<std::vector<int>> tuples;
  for_each_word(r, k, [&](const std::vector<int>& w) {
    if (w[0] != w[1]) tuples.push_back(w);
  });
  return Palette::make(k, r, std::move(tuples));
}

// Gadget: two disjoint transitive tournaments on r+1 vertices; every arc
// of the first becomes the leading pair of a tuple, every arc of the
// second the trailing pair, with all filler coordinates fresh.
Palette frac_r_gadget(int k, int r) {
  Builder b(k);
  std::vector<int> p(static_cast<size_t>(r) + 1), q(static_cast<size_t>(r) + 1);
  for (int v = 1; v <= r + 1; ++v) {
    p[static_cast<size_t>(v - 1)] = b.color("p" + std::to_string(v));
  }
  for (int v = 1; v <= r + 1; ++v) {
    q[static_cast<size_t>(v - 1)] = b.color("q" + std::to_string(v));
  }
  for (int a = 0; a < r + 1; ++a) {
    for (int c = a + 1; c < r + 1; ++c) {
      std::vector<int> t;
      t.push_back(p[static_cast<size_t>(a)]);
      t.push_back(p[static_cast<size_t>(c)]);
      for (int j = 2; j < k; ++j) t.push_back(b.fresh());
      b.tuple(std::move(t));
    }
  }
  for (int a = 0; a < r + 1; ++a) {
    for (int c = a + 1; c < r + 1; ++c) {
      std::vector<int> t;
      for (int j = 0; j < k - 2; ++j) t.push_back(b.fresh());
      t.push_back(q[static_cast<size_t>(a)]);
      t.push_back(q[static_cast<size_t>(c)]);
      b.tuple(std::move(t));
    }
  }
  return b.finish();
}

// Target with tuple set {x in [r]^k : x_1 != x_2 and x_{k-1} != x_k}.
Palette frac_r_sq_target(int k, int r) {
  guard_tuple_count(FamilyId::frac_r_sq,
                    ipow(BigInt(r), static_cast<unsigned>(k)));
  std::vector<std::vector<int>> tuples;
  for_each_word(r, k, [&](const std::vector<int>& w) {
    if (w[0] != w[1] && w[static_cast<size_t>(k - 2)] != w[static_cast<size_t>(k - 1)]) {
      tuples.push_back(w);
    }
  });
  return Palette::make(k, r, std::move(tuples));
}

// Gadget: one transitive tournament on r+1 vertices feeding the leading
// pair of each tuple, fillers fresh.
Palette frac_r_sq_gadget(int k, int r) {
  Builder b(k);
  std::vector<int> p(static_cast<size_t>(r) + 1);
  for (int v = 1; v <= r + 1; ++v) {
    p[static_cast<size_t>(v - 1)] = b.color("p" + std::to_string(v));
  }
  for (int a = 0; a < r + 1; ++a) {
    for (int c = a + 1; c < r + 1; ++c) {
      std::vector<int> t;
      t.push_back(p[static_cast<size_t>(a)]);
      t.push_back(p[static_cast<size_t>(c)]);
      for (int j = 2; j < k; ++j) t.push_back(b.fresh());
      b.tuple(std::move(t));
    }
  }
  return b.finish();
}

// Target with tuple set {x in [r]^k : x_1 < x_k}.
Palette half_frac_target(int k, int r) {
  guard_tuple_count(FamilyId::half_frac,
                    ipow(BigInt(r), static_cast<unsigned>(k)));
  std::vector<std::vector<int>> tuples;
  for_each_word(r, k, [&](const std::vector<int>& w) {
    if (w[0] < w[static_cast<size_t>(k - 1)]) tuples.push_back(w);
  });
  return Palette::make(k, r, std::move(tuples));
}

// Gadget: a chain c_1 -> c_2 -> ... -> c_{r+1}; tuple i runs from c_i to
// c_{i+1} with fresh fillers in between. Any homomorphic image of the
// chain in a target whose tuples are increasing in (first,last) would
// trace a strictly increasing sequence of r+1 colors.
Palette half_frac_gadget(int k, int r) {
  Builder b(k);
  std::vector<int> c(static_cast<size_t>(r) + 1);
  for (int v = 1; v <= r + 1; ++v) {
    c[static_cast<size_t>(v - 1)] = b.color("c" + std::to_string(v));
  }
  for (int i = 0; i < r; ++i) {
    std::vector<int> t;
    t.push_back(c[static_cast<size_t>(i)]);
    for (int j = 1; j < k - 1; ++j) t.push_back(b.fresh());
    t.push_back(c[static_cast<size_t>(i + 1)]);
    b.tuple(std::move(t));
  }
  return b.finish();
}

// Target with tuple set {x in [k]^k : x_i != i for every i}.
Palette derangement_target(int k) {
  guard_tuple_count(FamilyId::derangement,
                    ipow(BigInt(k), static_cast<unsigned>(k)));
  std::vector<std::vector<int>> tuples;
  for_each_word(k, k, [&](const std::vector<int>& w) {
    for (int i = 0; i < k; ++i) {
      if (w[static_cast<size_t>(i)] == i) return;
    }
    tuples.push_back(w);
  });
  return Palette::make(k, k, std::move(tuples));
}

// Gadget: one special color a; tuple i places a at coordinate i with all
// other coordinates fresh, for i = 1..k. Any homomorphism would have to
// send a to a color usable at every coordinate.
Palette derangement_gadget(int k) {
  Builder b(k);
  const int a = b.color("a");
  for (int i = 0; i < k; ++i) {
    std::vector<int> t;
    for (int j = 0; j < k; ++j) t.push_back(j == i ? a : b.fresh());
    b.tuple(std::move(t));
  }
  return b.finish();
}

// Target: two endpoint colors e1,e2 and k-2 middle colors m1..m{k-2};
// tuples are exactly endpoint-middle^(k-2)-endpoint words.
Palette endpoint_target(int k) {
  Builder b(k);
  std::vector<int> ends = {b.color("e1"), b.color("e2")};
  std::vector<int> mids;
  for (int i = 1; i <= k - 2; ++i) mids.push_back(b.color("m" + std::to_string(i)));
  guard_tuple_count(FamilyId::endpoint,
                    BigInt(4) * ipow(BigInt(k - 2), static_cast<unsigned>(k - 2)));
  for (int e1 : ends) {
    for (int e2 : ends) {
      for_each_word(k - 2, k - 2, [&](const std::vector<int>& w) {
        std::vector<int> t;
        t.push_back(e1);
        for (int x : w) t.push_back(mids[static_cast<size_t>(x)]);
        t.push_back(e2);
        b.tuple(std::move(t));
      });
    }
  }
  return b.finish();
}

// Gadget i (2 <= i <= k-1): special color a appearing once at coordinate
// 1 and once at coordinate i, fillers fresh. A homomorphic image of a
// would have to be an endpoint color and a middle color at once.
Palette endpoint_gadget(int k, int i) {
  Builder b(k);
  const int a = b.color("a");
  {
    std::vector<int> t;
    t.push_back(a);
    for (int j = 1; j < k; ++j) t.push_back(b.fresh());
    b.tuple(std::move(t));
  }
  {
    std::vector<int> t;
    for (int j = 0; j < k; ++j) t.push_back(j == i - 1 ? a : b.fresh());
    b.tuple(std::move(t));
  }
  return b.finish();
}

// Target: color classes U = {u1,u2}, V = {v1,v2}, W = {w1,w2} and a
// middle class of 3(k-2) colors; tuples start in U or W, end in V or W,
// run through middles, and never have both endpoints in W.
Palette endpoint3_target(int k) {
  Builder b(k);
  std::vector<int> U = {b.color("u1"), b.color("u2")};
  std::vector<int> V = {b.color("v1"), b.color("v2")};
  std::vector<int> W = {b.color("w1"), b.color("w2")};
  std::vector<int> mids;
  for (int i = 1; i <= 3 * (k - 2); ++i) {
    mids.push_back(b.color("m" + std::to_string(i)));
  }
  guard_tuple_count(FamilyId::endpoint3,
                    BigInt(12) * ipow(BigInt(3 * (k - 2)),
                                      static_cast<unsigned>(k - 2)));
  std::vector<int> firsts = {U[0], U[1], W[0], W[1]};
  std::vector<int> lasts = {V[0], V[1], W[0], W[1]};
  auto in_W = [&](int c) { return c == W[0] || c == W[1]; };
  for (int c1 : firsts) {
    for (int ck : lasts) {
      if (in_W(c1) && in_W(ck)) continue;
      for_each_word(3 * (k - 2), k - 2, [&](const std::vector<int>& w) {
        std::vector<int> t;
        t.push_back(c1);
        for (int x : w) t.push_back(mids[static_cast<size_t>(x)]);
        t.push_back(ck);
        b.tuple(std::move(t));
      });
    }
  }
  return b.finish();
}

// Extra gadget for the three-class target: special colors b and c chained
// through three tuples (...b), (b...c), (c...); any homomorphism forces
// the images of b and c into the shared endpoint class, and then the
// middle tuple has both endpoints there.
Palette endpoint3_chain_gadget(int k) {
  Builder bld(k);
  const int cb = bld.color("b");
  const int cc = bld.color("c");
  {
    std::vector<int> t;
    for (int j = 0; j < k - 1; ++j) t.push_back(bld.fresh());
    t.push_back(cb);
    bld.tuple(std::move(t));
  }
  {
    std::vector<int> t;
    t.push_back(cb);
    for (int j = 1; j < k - 1; ++j) t.push_back(bld.fresh());
    t.push_back(cc);
    bld.tuple(std::move(t));
  }
  {
    std::vector<int> t;
    t.push_back(cc);
    for (int j = 1; j < k; ++j) t.push_back(bld.fresh());
    bld.tuple(std::move(t));
  }
  return bld.finish();
}

Palette np3_p1() { return Palette::make(3, 5, {{0, 1, 2}, {1, 3, 4}}); }

Palette np3_p2() { return Palette::make(3, 5, {{0, 1, 2}, {2, 3, 4}}); }

Palette np3_pprime() {
  return Palette::make(3, 3, {{0, 1, 0}, {0, 1, 2}, {2, 1, 0}, {2, 1, 2}});
}

Palette np3_pdprime() { return Palette::make(3, 2, {{0, 0, 1}, {0, 1, 1}}); }

Palette np3_p3() { return Palette::make(3, 3, {{0, 1, 2}}); }

Palette npk_p1(int k) {
  std::vector<int> t1, t2;
  for (int i = 0; i < k; ++i) t1.push_back(i);
  for (int i = k - 1; i <= 2 * k - 2; ++i) t2.push_back(i);
  return Palette::make(k, 2 * k - 1, {t1, t2});
}

Palette npk_p2(int k) {
  std::vector<int> t1, t2;
  for (int i = 0; i < k; ++i) t1.push_back(i);
  t2.push_back(k);
  t2.push_back(k - 2);
  for (int i = k + 1; i <= 2 * k - 2; ++i) t2.push_back(i);
  return Palette::make(k, 2 * k - 1, {t1, t2});
}

// Two colors; tuples are exactly the words with first coordinate 0 and
// last coordinate 1.
Palette npk_pprime(int k) {
  std::vector<std::vector<int>> tuples;
  for_each_word(2, k - 2, [&](const std::vector<int>& w) {
    std::vector<int> t;
    t.push_back(0);
    for (int x : w) t.push_back(x);
    t.push_back(1);
    tuples.push_back(std::move(t));
  });
  return Palette::make(k, 2, std::move(tuples));
}

// Two colors; tuples are exactly the words with coordinate 2 equal to 0
// and coordinate k-1 equal to 1 (1-based).
Palette npk_pdprime(int k) {
  std::vector<std::vector<int>> tuples;
  for_each_word(2, k - 2, [&](const std::vector<int>& w) {
    std::vector<int> t(static_cast<size_t>(k), 0);
    t[1] = 0;
    t[static_cast<size_t>(k - 2)] = 1;
    size_t src = 0;
    for (int j = 0; j < k; ++j) {
      if (j == 1 || j == k - 2) continue;
      t[static_cast<size_t>(j)] = w[src++];
    }
    tuples.push_back(std::move(t));
  });
  return Palette::make(k, 2, std::move(tuples));
}

// Two colors; tuples are exactly the words beginning 0,0 and ending 1,1.
Palette npk_p3(int k) {
  std::vector<std::vector<int>> tuples;
  for_each_word(2, k - 4, [&](const std::vector<int>& w) {
    std::vector<int> t;
    t.push_back(0);
    t.push_back(0);
    for (int x : w) t.push_back(x);
    t.push_back(1);
    t.push_back(1);
    tuples.push_back(std::move(t));
  });
  return Palette::make(k, 2, std::move(tuples));
}

}  // namespace

std::string family_id_string(FamilyId id) {
  switch (id) {
    case FamilyId::frac_r: return "frac_r";
    case FamilyId::frac_r_sq: return "frac_r_sq";
    case FamilyId::half_frac: return "half_frac";
    case FamilyId::derangement: return "derangement";
    case FamilyId::endpoint: return "endpoint";
    case FamilyId::endpoint3: return "endpoint3";
    case FamilyId::np3_P1: return "np3_P1";
    case FamilyId::np3_P2: return "np3_P2";
    case FamilyId::np3_Pprime: return "np3_Pprime";
    case FamilyId::np3_Pdprime: return "np3_Pdprime";
    case FamilyId::np3_P3: return "np3_P3";
    case FamilyId::npk_P1: return "npk_P1";
    case FamilyId::npk_P2: return "npk_P2";
    case FamilyId::npk_Pprime: return "npk_Pprime";
    case FamilyId::npk_Pdprime: return "npk_Pdprime";
    case FamilyId::npk_P3: return "npk_P3";
  }
  throw InputError("unknown family id value");
}

FamilyId parse_family_id(const std::string& text) {
  static const std::vector<FamilyId> all = {
      FamilyId::frac_r,      FamilyId::frac_r_sq,   FamilyId::half_frac,
      FamilyId::derangement, FamilyId::endpoint,    FamilyId::endpoint3,
      FamilyId::np3_P1,      FamilyId::np3_P2,      FamilyId::np3_Pprime,
      FamilyId::np3_Pdprime, FamilyId::np3_P3,      FamilyId::npk_P1,
      FamilyId::npk_P2,      FamilyId::npk_Pprime,  FamilyId::npk_Pdprime,
      FamilyId::npk_P3};
  for (FamilyId id : all) {
    if (family_id_string(id) == text) return id;
  }
  throw InputError("unknown family id '" + text + "'");
}

Rational family_alpha(FamilyId id, int k, int r) {
  switch (id) {
    case FamilyId::frac_r:
      require_k(id, k, 3);
      require_r(id, r);
      return Rational(r - 1, r);
    case FamilyId::frac_r_sq:
      require_k(id, k, 4);
      require_r(id, r);
      return Rational(BigInt(r - 1) * (r - 1), BigInt(r) * r);
    case FamilyId::half_frac:
      require_k(id, k, 3);
      require_r(id, r);
      return Rational(r - 1, 2 * r);
    case FamilyId::derangement:
      require_k(id, k, 3);
      return Rational(ipow(BigInt(k - 1), static_cast<unsigned>(k)),
                      ipow(BigInt(k), static_cast<unsigned>(k)));
    case FamilyId::endpoint:
      require_k(id, k, 3);
      return Rational(BigInt(4) * ipow(BigInt(k - 2), static_cast<unsigned>(k - 2)),
                      ipow(BigInt(k), static_cast<unsigned>(k)));
    case FamilyId::endpoint3:
      require_k(id, k, 3);
      return Rational(BigInt(4) * ipow(BigInt(k - 2), static_cast<unsigned>(k - 2)),
                      BigInt(3) * ipow(BigInt(k), static_cast<unsigned>(k)));
    case FamilyId::np3_P1:
    case FamilyId::np3_P2:
      require_k(id, k, 3, 3);
      return Rational(2, 125);
    case FamilyId::np3_Pprime:
      require_k(id, k, 3, 3);
      return Rational(4, 27);
    case FamilyId::np3_Pdprime:
      require_k(id, k, 3, 3);
      return Rational(1, 4);
    case FamilyId::np3_P3:
      require_k(id, k, 3, 3);
      return Rational(1, 27);
    case FamilyId::npk_P1:
    case FamilyId::npk_P2:
      require_k(id, k, 4);
      return Rational(2, ipow(BigInt(2 * k - 1), static_cast<unsigned>(k)));
    case FamilyId::npk_Pprime:
    case FamilyId::npk_Pdprime:
      require_k(id, k, 4);
      return Rational(1, 4);
    case FamilyId::npk_P3:
      require_k(id, k, 4);
      return Rational(1, 16);
  }
  throw InputError("unknown family id value");
}

Palette build_named_palette(FamilyId id, int k, int r) {
  switch (id) {
    case FamilyId::frac_r:
      require_k(id, k, 3);
      require_r(id, r);
      return frac_r_target(k, r);
    case FamilyId::frac_r_sq:
      if (k == 3) {
        throw InputError(
            "family frac_r_sq: the k=3 value is certified by an external "
            "result and this builder intentionally refuses k=3; use k >= 4");
      }
      require_k(id, k, 4);
      require_r(id, r);
      return frac_r_sq_target(k, r);
    case FamilyId::half_frac:
      require_k(id, k, 3);
      require_r(id, r);
      return half_frac_target(k, r);
    case FamilyId::derangement:
      require_k(id, k, 3);
      return derangement_target(k);
    case FamilyId::endpoint:
      require_k(id, k, 3);
      return endpoint_target(k);
    case FamilyId::endpoint3:
      require_k(id, k, 3);
      return endpoint3_target(k);
    case FamilyId::np3_P1:
      require_k(id, k, 3, 3);
      return np3_p1();
    case FamilyId::np3_P2:
      require_k(id, k, 3, 3);
      return np3_p2();
    case FamilyId::np3_Pprime:
      require_k(id, k, 3, 3);
      return np3_pprime();
    case FamilyId::np3_Pdprime:
      require_k(id, k, 3, 3);
      return np3_pdprime();
    case FamilyId::np3_P3:
      require_k(id, k, 3, 3);
      return np3_p3();
    case FamilyId::npk_P1:
      require_k(id, k, 4);
      return npk_p1(k);
    case FamilyId::npk_P2:
      require_k(id, k, 4);
      return npk_p2(k);
    case FamilyId::npk_Pprime:
      require_k(id, k, 4);
      return npk_pprime(k);
    case FamilyId::npk_Pdprime:
      require_k(id, k, 4);
      return npk_pdprime(k);
    case FamilyId::npk_P3:
      require_k(id, k, 4);
      return npk_p3(k);
  }
  throw InputError("unknown family id value");
}

PaletteCertificate build_family(FamilyId id, int k, int r) {
  PaletteCertificate cert;
  cert.id = id;
  cert.k = k;
  cert.r = r;
  switch (id) {
    case FamilyId::frac_r:
      cert.target = build_named_palette(id, k, r);
      cert.gadgets = {frac_r_gadget(k, r)};
      cert.alpha = family_alpha(id, k, r);
      return cert;
    case FamilyId::frac_r_sq:
      cert.target = build_named_palette(id, k, r);
      cert.gadgets = {frac_r_sq_gadget(k, r)};
      cert.alpha = family_alpha(id, k, r);
      return cert;
    case FamilyId::half_frac:
      cert.target = build_named_palette(id, k, r);
      cert.gadgets = {half_frac_gadget(k, r)};
      cert.alpha = family_alpha(id, k, r);
      return cert;
    case FamilyId::derangement:
      cert.r = 0;
      cert.target = build_named_palette(id, k, r);
      cert.gadgets = {derangement_gadget(k)};
      cert.alpha = family_alpha(id, k, r);
      return cert;
    case FamilyId::endpoint:
      cert.r = 0;
      cert.target = build_named_palette(id, k, r);
      for (int i = 2; i <= k - 1; ++i) cert.gadgets.push_back(endpoint_gadget(k, i));
      cert.alpha = family_alpha(id, k, r);
      return cert;
    case FamilyId::endpoint3:
      cert.r = 0;
      cert.target = build_named_palette(id, k, r);
      for (int i = 2; i <= k - 1; ++i) cert.gadgets.push_back(endpoint_gadget(k, i));
      cert.gadgets.push_back(endpoint3_chain_gadget(k));
      cert.alpha = family_alpha(id, k, r);
      return cert;
    case FamilyId::np3_P1:
      cert.r = 0;
      cert.target = np3_pprime();
      cert.gadgets = {np3_p1()};
      cert.alpha = family_alpha(FamilyId::np3_Pprime, 3, 0);
      return cert;
    case FamilyId::np3_P2:
      cert.r = 0;
      cert.target = np3_pdprime();
      cert.gadgets = {np3_p2()};
      cert.alpha = family_alpha(FamilyId::np3_Pdprime, 3, 0);
      return cert;
    case FamilyId::npk_P1:
      cert.r = 0;
      cert.target = npk_pprime(k);
      cert.gadgets = {npk_p1(k)};
      cert.alpha = family_alpha(FamilyId::npk_Pprime, k, 0);
      return cert;
    case FamilyId::npk_P2:
      cert.r = 0;
      cert.target = npk_pdprime(k);
      cert.gadgets = {npk_p2(k)};
      cert.alpha = family_alpha(FamilyId::npk_Pdprime, k, 0);
      return cert;
    case FamilyId::np3_Pprime:
    case FamilyId::np3_Pdprime:
    case FamilyId::np3_P3:
    case FamilyId::npk_Pprime:
    case FamilyId::npk_Pdprime:
    case FamilyId::npk_P3:
      throw InputError("family " + family_id_string(id) +
                       " names a single palette with no certificate of its "
                       "own; use build_named_palette");
  }
  throw InputError("unknown family id value");
}

}  // namespace palcheck
