#include "doctest.h"
#include "palcheck/colorability.hpp"
#include "palcheck/hom.hpp"
#include "palcheck/errors.hpp"
#include "palcheck/rng.hpp"

using namespace palcheck;

namespace {

KGraph tight_path() {
  KGraph g;
  g.n = 4;
  g.k = 3;
  g.edges = {{0, 1, 2}, {1, 2, 3}};
  g.canonicalize();
  return g;
}

Palette rainbow3() {
  return Palette::make(3, 3, {{0, 1, 2}});
}

Palette random_palette(CounterRng& rng, int k, int ncolors, int max_tuples) {
  const int want =
      static_cast<int>(rng.next_below(static_cast<uint64_t>(max_tuples) + 1));
  std::vector<std::vector<int>> tuples;
  for (int t = 0; t < want; ++t) {
    std::vector<int> tup;
    for (int i = 0; i < k; ++i) {
      tup.push_back(
          static_cast<int>(rng.next_below(static_cast<uint64_t>(ncolors))));
    }
    tuples.push_back(std::move(tup));
  }
  return Palette::make(k, ncolors, std::move(tuples));
}

KGraph random_kgraph(CounterRng& rng, int n, int k, int max_edges) {
  const int want =
      static_cast<int>(rng.next_below(static_cast<uint64_t>(max_edges) + 1));
  KGraph g;
  g.n = n;
  g.k = k;
  for (int e = 0; e < want; ++e) {
    std::vector<int> pool(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) pool[static_cast<size_t>(v)] = v;
    rng.shuffle(pool);
    g.edges.push_back(std::vector<int>(pool.begin(), pool.begin() + k));
  }
  g.canonicalize();
  g.validate();
  return g;
}

}  // namespace

TEST_CASE("ordered colorability on a pinned instance") {
  const KGraph g = tight_path();
  const Palette p = rainbow3();
  // Under 0<1<2<3 the shared pair {1,2} would need two different colors.
  CHECK(is_ordered_colorable(g, {0, 1, 2, 3}, p).decision == Decision::none);
  // Putting 0 and 3 first makes {1,2} the "drop the least vertex" set of
  // both edges, which is consistent.
  const OrderedColorResult r = is_ordered_colorable(g, {0, 3, 1, 2}, p);
  REQUIRE(r.decision == Decision::witness);
  CHECK(check_ordered_coloring(g, {0, 3, 1, 2}, p, r.coloring));
  CHECK(r.coloring.color_of({1, 2}) == 0);
  CHECK(r.coloring.color_of({0, 1}) == 2);
  CHECK(r.coloring.color_of({2, 3}) == 1);
}

TEST_CASE("ordered witness is the lexicographically least coloring") {
  // A single edge with the all-tuples palette: the least coloring is all
  // zeros.
  KGraph g;
  g.n = 3;
  g.k = 3;
  g.edges = {{0, 1, 2}};
  std::vector<std::vector<int>> all;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) all.push_back({a, b, c});
    }
  }
  const Palette p = Palette::make(3, 2, std::move(all));
  const OrderedColorResult r = is_ordered_colorable(g, {0, 1, 2}, p);
  REQUIRE(r.decision == Decision::witness);
  CHECK(r.coloring.colors == std::vector<int>{0, 0, 0});
}

TEST_CASE("unordered colorability finds an order for the tight path") {
  const ColorResult r = is_colorable(tight_path(), rainbow3());
  REQUIRE(r.decision == Decision::witness);
  CHECK(check_ordered_coloring(tight_path(), r.order, rainbow3(),
                               r.coloring));
}

TEST_CASE("complete graph on 4 vertices is not rainbow colorable") {
  const ColorResult r = is_colorable(complete_kgraph(4, 3), rainbow3());
  CHECK(r.decision == Decision::none);
  // K4 is vertex-transitive: one orbit representative, two palette sides.
  CHECK(r.orders_tried <= 2);
}

TEST_CASE("single color loop palette colors everything") {
  const Palette loop = Palette::make(3, 1, {{0, 0, 0}});
  CHECK(is_colorable(complete_kgraph(5, 3), loop).decision ==
        Decision::witness);
  CHECK(is_colorable(tight_path(), loop).decision == Decision::witness);
}

TEST_CASE("empty tuple set colors nothing with edges") {
  const Palette none = Palette::make(3, 2, {});
  CHECK(is_colorable(tight_path(), none).decision == Decision::none);
  KGraph edgeless;
  edgeless.n = 3;
  edgeless.k = 3;
  CHECK(is_colorable(edgeless, none).decision == Decision::witness);
}

TEST_CASE("pruned search agrees with full order enumeration") {
  CounterRng rng(808);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng.next_below(2));
    const KGraph g = random_kgraph(rng, n, 3, 4);
    const Palette p = random_palette(rng, 3, 2, 4);
    const ColorResult fast = is_colorable(g, p);
    const ColorResult slow = is_colorable_full_enumeration(g, p);
    CHECK((fast.decision == Decision::witness) ==
          (slow.decision == Decision::witness));
    if (fast.decision == Decision::witness) {
      ++yes;
      CHECK(check_ordered_coloring(g, fast.order, p, fast.coloring));
      CHECK(check_ordered_coloring(g, slow.order, p, slow.coloring));
      CHECK(fast.orders_tried <= slow.orders_tried);
    } else {
      ++no;
    }
  }
  CHECK(yes > 10);
  CHECK(no > 10);
}

TEST_CASE("budget exhaustion reports unknown") {
  // The tight path is rainbow colorable, but a witness needs all five
  // shadow sets assigned; a one-node budget cannot get there. (Orders
  // refuted outright by propagation cost zero nodes and consume nothing.)
  const ColorResult r = is_colorable(tight_path(), rainbow3(), uint64_t{1});
  CHECK(r.decision == Decision::unknown);
  // K4 is refuted entirely by propagation, so even budget 1 settles it.
  CHECK(is_colorable(complete_kgraph(4, 3), rainbow3(), uint64_t{1})
            .decision == Decision::none);
}

TEST_CASE("large vertex count without budget is refused") {
  KGraph g;
  g.n = 10;
  g.k = 3;
  g.edges = {{0, 1, 2}};
  CHECK_THROWS_AS(is_colorable(g, rainbow3()), InputError);
  // With a budget, easy instances still finish...
  CHECK(is_colorable(g, rainbow3(), uint64_t{50}).decision ==
        Decision::witness);
  // ...and tight budgets degrade to unknown instead of running forever.
  CHECK(is_colorable(g, rainbow3(), uint64_t{2}).decision ==
        Decision::unknown);
}

TEST_CASE("family colorability reports the witnessing member") {
  const std::vector<KGraph> fam{complete_kgraph(4, 3), tight_path()};
  const FamilyColorResult r = is_family_colorable(fam, rainbow3());
  REQUIRE(r.decision == Decision::witness);
  CHECK(r.witness_member == 1);  // K4 is not colorable, the path is
  const Palette none = Palette::make(3, 2, {});
  CHECK(is_family_colorable(fam, none).decision == Decision::none);
}

TEST_CASE("transfer moves colorings between arbitrary orders") {
  const TransferCheck tp =
      check_symmetrization_transfer(tight_path(), rainbow3(), 20, 99);
  CHECK(tp.precondition_ok);
  CHECK(tp.pass);
  CHECK(tp.checked == 20);

  CounterRng rng(424242);
  int covered = 0;
  for (int trial = 0; trial < 8; ++trial) {
    const KGraph g = random_kgraph(rng, 4, 3, 3);
    const Palette p = random_palette(rng, 3, 2, 6);
    const TransferCheck tc = check_symmetrization_transfer(
        g, p, 10, static_cast<uint64_t>(trial));
    CHECK(tc.pass);
    if (tc.precondition_ok) {
      ++covered;
      CHECK(tc.checked == 10);
    }
  }
  CHECK(covered > 0);  // the sweep must exercise real transfers
}

TEST_CASE("colorable under p iff colorable under reverse of p") {
  CounterRng rng(171717);
  for (int trial = 0; trial < 30; ++trial) {
    const KGraph g = random_kgraph(rng, 4, 3, 3);
    const Palette p = random_palette(rng, 3, 2, 4);
    CHECK((is_colorable(g, p).decision == Decision::witness) ==
          (is_colorable(g, reverse_palette(p)).decision ==
           Decision::witness));
  }
}

TEST_CASE("removing an edge never destroys colorability") {
  CounterRng rng(55221);
  for (int trial = 0; trial < 30; ++trial) {
    KGraph g = random_kgraph(rng, 5, 3, 5);
    if (g.edges.empty()) continue;
    const Palette p = random_palette(rng, 3, 2, 5);
    if (is_colorable(g, p).decision != Decision::witness) continue;
    KGraph smaller = g;
    smaller.edges.erase(smaller.edges.begin() +
                        static_cast<long>(rng.next_below(g.edges.size())));
    CHECK(is_colorable(smaller, p).decision == Decision::witness);
  }
}

TEST_CASE("ordered CSP agrees with brute-force coloring enumeration") {
  CounterRng rng(363636);
  int yes = 0, no = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const KGraph g = random_kgraph(rng, 4, 3, 3);
    const Palette p = random_palette(rng, 3, 2, 5);
    const auto sets = shadow(g);
    if (sets.size() > 8) continue;
    std::vector<int> order(static_cast<size_t>(g.n));
    for (int v = 0; v < g.n; ++v) order[static_cast<size_t>(v)] = v;
    rng.shuffle(order);

    // Enumerate every coloring of the shadow.
    bool any = false;
    std::vector<int> colors(sets.size(), 0);
    for (;;) {
      ShadowColoring phi{sets, colors};
      if (check_ordered_coloring(g, order, p, phi)) {
        any = true;
        break;
      }
      size_t pos = 0;
      while (pos < colors.size() &&
             colors[pos] == p.num_colors - 1) {
        colors[pos] = 0;
        ++pos;
      }
      if (pos == colors.size()) break;
      ++colors[pos];
    }
    const bool csp =
        is_ordered_colorable(g, order, p).decision == Decision::witness;
    CHECK(csp == any);
    (csp ? yes : no) += 1;
  }
  CHECK(yes > 5);
  CHECK(no > 5);
}

TEST_CASE("homomorphisms push colorings forward") {
  CounterRng rng(818181);
  int covered = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Palette p = random_palette(rng, 3, 2, 4);
    const Palette q = random_palette(rng, 3, 3, 12);
    const HomResult h = hom_exists(p, q);
    if (h.status != HomStatus::witness) continue;
    const KGraph g = random_kgraph(rng, 4, 3, 3);
    const ColorResult c = is_colorable(g, p);
    if (c.decision != Decision::witness) continue;
    ++covered;
    ShadowColoring mapped = c.coloring;
    for (int& col : mapped.colors) {
      col = h.map[static_cast<size_t>(col)];
    }
    CHECK(check_ordered_coloring(g, c.order, q, mapped));
  }
  CHECK(covered > 3);
}

TEST_CASE("transferred coloring differs from a fresh solve only by twist") {
  // The transfer keeps every base color; only patterns change.
  const KGraph g = tight_path();
  const Palette p = rainbow3();
  std::vector<SymColor> decode;
  const Palette sym = symmetrize(p, &decode);
  const std::vector<int> o1{0, 3, 1, 2};
  const std::vector<int> o2{3, 2, 1, 0};
  const OrderedColorResult r = is_ordered_colorable(g, o1, sym);
  REQUIRE(r.decision == Decision::witness);
  const ShadowColoring moved =
      transfer_coloring(g, o1, o2, p, sym, decode, r.coloring);
  CHECK(check_ordered_coloring(g, o2, sym, moved));
  for (size_t i = 0; i < moved.colors.size(); ++i) {
    CHECK(decode[static_cast<size_t>(moved.colors[i])].base ==
          decode[static_cast<size_t>(r.coloring.colors[i])].base);
  }
}
