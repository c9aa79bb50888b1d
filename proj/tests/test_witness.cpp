#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace actlab;

namespace {

  // ∃z (x = t·z ∧ y = s·z) by scanning the table.
  bool pair_joined(FiniteAct const& a, Elem t, Elem s, Point x, Point y) {
    for (Point z = 0; z < a.size(); ++z)
      if (a.act(t, z) == x && a.act(s, z) == y) return true;
    return false;
  }

  std::size_t brute_force_triples(FiniteAct const& target, Elem e) {
    auto t   = support::table_of(target.monoid());
    auto rep = oracle::regular_rep(t);
    auto se  = oracle::restrict(rep, oracle::orbit(rep, e));
    auto tgt = support::act_of(t, target);
    std::size_t count = 0;
    for (auto const& p : oracle::partitions(se.points)) {
      bool ok = true;
      for (oracle::U x = 0; x < se.points && ok; ++x)
        for (oracle::U y = 0; y < se.points && ok; ++y)
          if (p[x] == p[y])
            for (oracle::U s = 0; s < t.n && ok; ++s) ok = p[se.act(s, x)] == p[se.act(s, y)];
      if (!ok) continue;
      oracle::U blocks = *std::max_element(p.begin(), p.end()) + 1;
      oracle::Act q{&t, blocks, std::vector<oracle::U>(t.n * blocks)};
      for (oracle::U s = 0; s < t.n; ++s)
        for (oracle::U x = 0; x < se.points; ++x) q.t[s * blocks + p[x]] = p[se.act(s, x)];
      bool regular = true;
      for (oracle::U b = 0; b < blocks; ++b) regular = regular && oracle::act_regular_by_hom(q, b);
      if (!regular) continue;
      for (std::uint32_t mask = 0; mask < (1u << se.points); ++mask) {
        std::vector<oracle::U> ideal;
        bool good = true;
        for (oracle::U x = 0; x < se.points; ++x) {
          if (!(mask >> x & 1)) continue;
          ideal.push_back(x);
          for (oracle::U s = 0; s < t.n; ++s) good = good && (mask >> se.act(s, x) & 1);
          for (oracle::U y = 0; y < se.points; ++y) good = good && (p[x] != p[y] || (mask >> y & 1));
        }
        if (!good) continue;
        // every map ideal -> target, kept when it is a homomorphism with kernel p
        std::vector<oracle::U> img(ideal.size(), 0);
        while (true) {
          bool hom = true;
          for (std::size_t i = 0; i < ideal.size() && hom; ++i) {
            for (std::size_t j = 0; j < ideal.size() && hom; ++j) hom = (img[i] == img[j]) == (p[ideal[i]] == p[ideal[j]]);
            for (oracle::U s = 0; s < t.n && hom; ++s) {
              auto k = std::find(ideal.begin(), ideal.end(), se.act(s, ideal[i])) - ideal.begin();
              hom    = img[k] == tgt.act(s, img[i]);
            }
          }
          count += hom;
          std::size_t i = 0;
          while (i < img.size() && img[i] + 1 == tgt.points) img[i++] = 0;
          if (i == img.size()) break;
          ++img[i];
        }
      }
    }
    return count;
  }

}  // namespace

TEST(Grid, Rz2PatternIsLowerTriangular) {
  auto rz  = fixtures::rz2_plus1();
  auto rep = regular_representation(rz.monoid);
  for (std::size_t n : {0u, 1u, 3u}) {
    auto w   = build_grid(rep, rz["1"], rz["x"], rz["y"], n);
    auto pat = verify_order_pattern(w);
    std::size_t checked = 0;
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= n; ++j) {
        EXPECT_EQ(pat[i][j], i >= j);
        EXPECT_EQ(pair_joined(w.act, rz["x"], rz["y"], w.b_points[i], w.c_points[j]), i >= j);
        ++checked;
      }
    EXPECT_EQ(checked, (n + 1) * (n + 1));
    EXPECT_TRUE(is_regular_act(w.act));
  }
  EXPECT_EQ(build_grid(rep, rz["1"], rz["x"], rz["y"], 3).act.size(), 18u);
}

TEST(Grid, Preconditions) {
  auto cg  = fixtures::cg21();
  auto rep = regular_representation(cg.monoid);
  EXPECT_THROW(build_grid(rep, cg["1"], cg["0_0"], cg["0_1"], 2), IdealsComparable);
  EXPECT_THROW(build_grid(rep, 99, cg["0_0"], cg["0_1"], 2), OutOfRange);
}

TEST(Tree, Cg21Separation) {
  auto cg  = fixtures::cg21();
  auto rep = regular_representation(cg.monoid);
  std::vector<Point> chain{cg["0_0"], cg["0_1"], cg["1"]};
  auto w = build_tree(rep, cg["1"], chain, 2, 2);
  ASSERT_EQ(w.leaves.size(), 4u);
  EXPECT_EQ(w.act.size(), 16u);
  EXPECT_TRUE(std::is_sorted(w.leaves.begin(), w.leaves.end(), tree_order));
  auto sep = tree_separation(w);
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = 0; q < 4; ++q) EXPECT_EQ(sep[p][q], p != q);
  // leaves sharing their first coordinate meet at level 0
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = 0; q < 4; ++q)
      EXPECT_EQ(w.act.act(w.level_elems[0], w.leaf_points[p]) == w.act.act(w.level_elems[0], w.leaf_points[q]),
                w.leaves[p][0] == w.leaves[q][0]);
  EXPECT_TRUE(is_regular_act(w.act));

  auto flat = build_tree(rep, cg["1"], chain, 2, 0);
  EXPECT_EQ(flat.leaves.size(), 1u);
  EXPECT_EQ(flat.act.size(), 5u);
}

TEST(Tree, OrderOnEventuallyZeroSequences) {
  using V = std::vector<std::uint8_t>;
  EXPECT_TRUE(tree_order(V{1, 0}, V{0, 1}));
  EXPECT_TRUE(tree_order(V{0, 0}, V{1, 0}));
  EXPECT_FALSE(tree_order(V{0, 1}, V{1, 0}));
  EXPECT_EQ(support_end(V{0, 2, 0}), 2u);
}

TEST(Tree, Preconditions) {
  auto rz  = fixtures::rz2_plus1();
  auto rep = regular_representation(rz.monoid);
  EXPECT_THROW(build_tree(rep, rz["1"], {rz["x"], rz["y"]}, 2, 2), ChainNotStrict);
  auto cg   = fixtures::cg21();
  auto crep = regular_representation(cg.monoid);
  EXPECT_THROW(build_tree(crep, cg["1"], {cg["0_1"], cg["0_0"]}, 2, 2), ChainNotStrict);
  EXPECT_THROW(build_tree(crep, cg["1"], {cg["0_0"]}, 2, 2), ChainNotStrict);
  EXPECT_THROW(build_tree(crep, cg["1"], {cg["0_0"], cg["0_1"]}, 0, 1), PreconditionFailed);
}

// The empty subact counts as I: it stands for a point outside A.
TEST(Triples, TrivialMonoidHasFullAndEmptyIdeal) {
  auto rep  = regular_representation(fixtures::trivial().monoid);
  auto list = enumerate_triples(rep);
  ASSERT_EQ(list.items.size(), 2u);
  EXPECT_FALSE(list.overflow);
  std::size_t full = 0;
  for (auto const& tr : list.items) {
    EXPECT_TRUE(tr.theta.is_identity());
    full += tr.ideal.size() == 1;
  }
  EXPECT_EQ(full, 1u);
  EXPECT_EQ(brute_force_triples(rep, 0), 2u);
}

TEST(Triples, CountsMatchBruteForce) {
  auto cg  = fixtures::cg21();
  auto rep = regular_representation(cg.monoid);
  for (auto e : idempotents(*cg.monoid)) {
    auto list = enumerate_triples_at(rep, e);
    EXPECT_EQ(list.items.size(), brute_force_triples(rep, e)) << e;
    for (auto const& tr : list.items) EXPECT_FALSE(triple_violation(rep, tr));
  }
  auto all = enumerate_triples(rep);
  EXPECT_EQ(all.cover, std::vector<Elem>{cg["1"]});
  EXPECT_EQ(all.items.size(), 14u);
  std::mt19937_64 rng(43);
  for (auto& [name, nm] : support::fixture_monoids()) {
    if (nm.monoid->order() > 7) continue;
    auto a = support::random_act(nm.monoid, rng, 4);
    for (auto e : idempotents(*nm.monoid))
      EXPECT_EQ(enumerate_triples_at(a, e).items.size(), brute_force_triples(a, e)) << name;
  }
}

TEST(Triples, CapAndBadInput) {
  auto cg  = fixtures::cg21();
  auto rep = regular_representation(cg.monoid);
  auto capped = enumerate_triples(rep, 1);
  EXPECT_TRUE(capped.overflow);
  for (auto const& tr : capped.items) EXPECT_FALSE(triple_violation(rep, tr));
  EXPECT_THROW(enumerate_triples_at(rep, cg["1_0"]), NotIdempotent);
  auto items = enumerate_triples(rep).items;
  auto tr    = *std::find_if(items.begin(), items.end(), [](Triple const& x) { return !x.ideal.empty(); });
  tr.alpha.assign(tr.alpha.size(), 99);
  EXPECT_TRUE(triple_violation(rep, tr));
}

TEST(Extract, FixtureCase) {
  auto cg  = fixtures::cg21();
  auto rep = regular_representation(cg.monoid);
  auto sub = orbit(rep, cg["0_0"]);
  auto ex  = extract_triple(rep, sub, cg["0_1"]);
  EXPECT_FALSE(triple_violation(ex.target.act, ex.triple));
  EXPECT_EQ(ex.triple.idempotent, cg["1"]);
  EXPECT_THROW(extract_triple(fixtures::cg21_collapse_act(), ElementSet{0}, 0), NoCoverIdempotentApplies);
}

TEST(Extract, WholeActGivesTotalMap) {
  auto b   = fixtures::b22_plus1();
  auto rep = regular_representation(b.monoid);
  for (Point b0 = 0; b0 < rep.size(); ++b0) {
    auto ex = extract_triple(rep, ElementSet::range(rep.size()), b0);
    auto se = cyclic_subact(rep, ex.triple.idempotent);
    EXPECT_EQ(ex.triple.ideal.size(), se.act.size());
    EXPECT_EQ(ex.triple.alpha.size(), se.act.size());
  }
}

TEST(Extract, GridActAgainstOneCopy) {
  auto rz  = fixtures::rz2_plus1();
  auto rep = regular_representation(rz.monoid);
  auto w   = build_grid(rep, rz["1"], rz["x"], rz["y"], 2);
  ElementSet copy(w.copy_points[0]);
  ASSERT_TRUE(is_closed(w.act, copy));
  std::size_t tried = 0;
  for (Point b0 = 0; b0 < w.act.size(); ++b0) {
    if (copy.contains(b0)) continue;
    auto ex = extract_triple(w.act, copy, b0);
    EXPECT_FALSE(triple_violation(ex.target.act, ex.triple));
    ++tried;
  }
  EXPECT_GT(tried, 0u);
}

TEST(Extract, RandomInstancesVerify) {
  std::mt19937_64 rng(47);
  std::size_t done = 0;
  auto fx = support::fixture_monoids();
  while (done < 50) {
    auto const& nm = fx[rng() % fx.size()].second;
    auto b = support::random_act(nm.monoid, rng);
    auto core = regular_core(b);
    if (core.empty()) continue;
    auto items = core.items();
    Point b0 = items[rng() % items.size()];
    auto a_pts = orbit(b, static_cast<Point>(rng() % b.size()));
    auto ex = extract_triple(b, a_pts, b0);
    EXPECT_FALSE(triple_violation(ex.target.act, ex.triple));
    // the image of e under the glued map is b0 itself when b0 lies in A
    if (a_pts.contains(b0)) {
      auto se = cyclic_subact(regular_representation(nm.monoid), ex.triple.idempotent);
      auto k  = std::find(ex.triple.ideal.begin(), ex.triple.ideal.end(), se.local(ex.triple.idempotent));
      ASSERT_NE(k, ex.triple.ideal.end());
      EXPECT_EQ(ex.target.embed[ex.triple.alpha[k - ex.triple.ideal.begin()]], b0);
    }
    ++done;
  }
}

namespace {

  CountingSpec chain3_spec(NamedMonoid const& c3) {
    auto phi = fo::parse("[" + std::to_string(c3["b"]) + "]x = y & x != y");
    return {c3["1"], c3["b"], c3["c"], c3["b"], c3["c"], phi, 1};
  }

}  // namespace

TEST(Counting, PatternFollowsK) {
  auto c3   = fixtures::chain3();
  auto spec = chain3_spec(c3);
  for (auto const& k : std::vector<std::vector<Elem>>{{}, {0}, {1}, {0, 2}, {1, 2}}) {
    auto w = build_counting(c3.monoid, spec, ElementSet(k), 2);
    ASSERT_EQ(w.pattern.size(), 3u);
    for (std::size_t i = 0; i <= 2; ++i)
      EXPECT_EQ(w.pattern[i], std::find(k.begin(), k.end(), i) != k.end());
  }
  auto big = build_counting(c3.monoid, spec, ElementSet{0, 2}, 3);
  EXPECT_EQ(big.pattern, (std::vector<bool>{true, false, true, false}));
  EXPECT_THROW(build_counting(c3.monoid, spec, ElementSet{3}, 2), OutOfRange);
}

TEST(Counting, Preconditions) {
  auto cg = fixtures::cg21();
  CountingSpec spec{cg["1"], cg["0_1"], cg["0_0"], cg["0_1"], cg["0_0"], fo::parse("x = y"), 1};
  EXPECT_THROW(build_counting(cg.monoid, spec, ElementSet{0}, 1), PreconditionFailed);
  auto c3   = fixtures::chain3();
  auto bad  = chain3_spec(c3);
  bad.alpha = c3["c"];
  EXPECT_THROW(build_counting(c3.monoid, bad, ElementSet{0}, 1), PreconditionFailed);
  bad     = chain3_spec(c3);
  bad.phi = fo::parse("x = w");
  EXPECT_THROW(build_counting(c3.monoid, bad, ElementSet{0}, 1), fo::ArityMismatch);
}
