#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace actlab;

TEST(Annihilator, Extremes) {
  auto rz  = fixtures::rz2_plus1();
  auto rep = regular_representation(rz.monoid);
  auto ann = annihilator(rep, rz["x"]);
  // s·x = x for every s: one class
  EXPECT_EQ(ActCongruence(ann).num_blocks(), 1u);
  EXPECT_TRUE(is_left_congruence(*rz.monoid, ann));
  auto cg   = fixtures::cg21();
  auto crep = regular_representation(cg.monoid);
  EXPECT_EQ(ActCongruence(annihilator(crep, cg["1"])).num_blocks(), cg.monoid->order());
}

TEST(Annihilator, IsALeftCongruenceOnRandomActs) {
  std::mt19937_64 rng(17);
  for (auto& [name, nm] : support::fixture_monoids()) {
    for (int k = 0; k < 5; ++k) {
      auto a = support::random_act(nm.monoid, rng);
      for (Point x = 0; x < a.size(); ++x) EXPECT_TRUE(is_left_congruence(*nm.monoid, annihilator(a, x))) << name;
    }
  }
}

TEST(ActRegular, IdempotentsWitnessThemselves) {
  for (auto& [name, nm] : support::fixture_monoids()) {
    auto rep = regular_representation(nm.monoid);
    for (auto e : idempotents(*nm.monoid)) {
      auto pr = is_act_regular(rep, e);
      ASSERT_TRUE(pr.idempotent) << name;
      EXPECT_TRUE(pointed_iso(rep, e, rep, *pr.idempotent)) << name;
    }
  }
}

TEST(ActRegular, B22BandIsRegular) {
  auto b   = fixtures::b22_plus1();
  auto rep = regular_representation(b.monoid);
  for (Elem a = 0; a < b.monoid->order(); ++a) EXPECT_TRUE(is_act_regular(rep, a).idempotent);
}

TEST(ActRegular, CollapseActHasRefutations) {
  auto a = fixtures::cg21_collapse_act();
  auto t = support::table_of(a.monoid());
  for (Point x = 0; x < a.size(); ++x) {
    auto pr = is_act_regular(a, x);
    EXPECT_FALSE(pr.idempotent);
    EXPECT_FALSE(oracle::act_regular_by_iso(support::act_of(t, a), x));
    // one distinguishing pair per idempotent
    EXPECT_EQ(pr.refutations.size(), idempotents(a.monoid()).size());
  }
  EXPECT_TRUE(regular_core(a).empty());
}

TEST(ActRegular, AgreesWithBothOraclesOnRandomActs) {
  std::mt19937_64 rng(23);
  for (auto& [name, nm] : support::fixture_monoids()) {
    auto t = support::table_of(*nm.monoid);
    for (int k = 0; k < 10; ++k) {
      auto a  = support::random_act(nm.monoid, rng);
      auto oa = support::act_of(t, a);
      for (Point x = 0; x < a.size(); ++x) {
        bool got = is_act_regular(a, x).idempotent.has_value();
        EXPECT_EQ(got, oracle::act_regular_by_iso(oa, x)) << name;
        EXPECT_EQ(got, oracle::act_regular_by_hom(oa, x)) << name;
      }
      auto cert = regularity_certificate(a);
      for (auto const& pr : cert) EXPECT_TRUE(verify_point_regularity(a, pr)) << name;
    }
  }
}

TEST(RegularCore, FixtureValues) {
  auto rz = fixtures::rz2_plus1();
  EXPECT_EQ(monoid_regular_core(rz.monoid), (ElementSet{0, 1, 2}));
  auto cg = fixtures::cg21();
  // the identity is idempotent, so S·1 is regular as well
  EXPECT_EQ(monoid_regular_core(cg.monoid), ElementSet::range(5));
  auto b    = fixtures::b22_plus1();
  auto band = ElementSet::range(9).minus(ElementSet{b["1"]});
  EXPECT_TRUE(band.subset_of(monoid_regular_core(b.monoid)));
  auto nil = fixtures::nil3();
  // a·a = 0 and S·a = {a, 0}: a is not regular
  EXPECT_EQ(monoid_regular_core(nil.monoid), (ElementSet{nil["0"]}));
}

TEST(RegularCore, MaximalRegularSubactOnRandomActs) {
  std::mt19937_64 rng(29);
  for (auto& [name, nm] : support::fixture_monoids()) {
    auto t = support::table_of(*nm.monoid);
    for (int k = 0; k < 10; ++k) {
      auto a    = support::random_act(nm.monoid, rng);
      auto core = regular_core(a);
      auto want = support::act_of(t, a);
      std::vector<Elem> expect;
      for (auto x : oracle::regular_core(want)) expect.push_back(x);
      EXPECT_EQ(core, ElementSet(expect)) << name;
      EXPECT_TRUE(is_closed(a, core));
      if (!core.empty()) {
        EXPECT_TRUE(is_regular_act(subact_on(a, core).act));
      }
      // adding any excluded point breaks regularity of its orbit
      for (Point x = 0; x < a.size(); ++x) {
        if (core.contains(x)) continue;
        auto orb = orbit(a, x);
        EXPECT_FALSE(is_regular_act(subact_on(a, orb).act)) << name;
      }
    }
  }
}

TEST(RegularCore, ClosedUnderMultiplicationAndHasIdempotent) {
  for (auto const& [name, m] : support::corpus_monoids()) {
    auto core = monoid_regular_core(m);
    ASSERT_FALSE(core.empty()) << name;
    bool has_idem = false;
    for (auto x : core) {
      has_idem = has_idem || is_idempotent(*m, x);
      for (auto y : core) EXPECT_TRUE(core.contains(m->mul(x, y))) << name;
    }
    EXPECT_TRUE(has_idem) << name;
  }
}

// eS = fS ⟺ eR = fR for idempotents of R.
TEST(RegularCore, RightIdealsOfIdempotentsAgree) {
  for (auto const& [name, m] : support::corpus_monoids()) {
    auto core = monoid_regular_core(m);
    for (auto e : core) {
      if (!is_idempotent(*m, e)) continue;
      for (auto f : core) {
        if (!is_idempotent(*m, f)) continue;
        bool by_s = right_ideal(*m, e) == right_ideal(*m, f);
        bool by_r = right_multiples(*m, core, e) == right_multiples(*m, core, f);
        EXPECT_EQ(by_s, by_r) << name;
      }
    }
  }
}

TEST(VonNeumann, FixturesAndOracle) {
  EXPECT_TRUE(is_vn_regular(*fixtures::b22_plus1().monoid));
  EXPECT_TRUE(is_vn_regular(*fixtures::trivial().monoid));
  EXPECT_TRUE(is_vn_regular(*fixtures::cg21().monoid));
  EXPECT_FALSE(is_vn_regular(*fixtures::nil3().monoid));
  for (auto const& [name, m] : support::corpus_monoids()) {
    EXPECT_EQ(is_vn_regular(*m), oracle::vn_regular(support::table_of(*m))) << name;
  }
}

TEST(VonNeumann, RegularMonoidsHaveRegularRepresentations) {
  for (auto const& [name, m] : support::corpus_monoids()) {
    if (is_vn_regular(*m)) {
      EXPECT_TRUE(is_regular_act(regular_representation(m))) << name;
    }
  }
}

TEST(Decompose, CyclicAndCoproduct) {
  auto cg   = fixtures::cg21();
  auto rep  = regular_representation(cg.monoid);
  auto one  = cyclic_subact(rep, cg["0_1"]);
  auto d1   = decompose_regular(one.act);
  EXPECT_EQ(d1.generators.size(), 1u);
  EXPECT_TRUE(d1.theta.is_identity());
  auto co = coproduct({&one.act, &one.act});
  auto d2 = decompose_regular(co.act);
  EXPECT_EQ(d2.generators.size(), 2u);
  EXPECT_TRUE(d2.theta.is_identity());
  EXPECT_THROW(decompose_regular(fixtures::cg21_collapse_act()), NotRegular);
}

TEST(Decompose, GridActNeedsProperAmalgam) {
  auto rz  = fixtures::rz2_plus1();
  auto rep = regular_representation(rz.monoid);
  auto w   = build_grid(rep, rz["1"], rz["x"], rz["y"], 2);
  auto d   = decompose_regular(w.act);
  EXPECT_FALSE(d.theta.is_identity());
  EXPECT_TRUE(is_amalgam(d.summands.act, d.theta));
  // the quotient really is the grid act
  auto q = quotient_act(d.summands.act, d.theta);
  ASSERT_EQ(q.act.size(), w.act.size());
  for (Point b = 0; b < q.act.size(); ++b)
    for (Elem s = 0; s < rz.monoid->order(); ++s)
      EXPECT_EQ(d.block_to_point[q.act.act(s, b)], w.act.act(s, d.block_to_point[b]));
}

TEST(LinearOrderLift, Cases) {
  auto cg   = fixtures::cg21();
  auto core = monoid_regular_core(cg.monoid);
  auto rep  = regular_representation(cg.monoid);
  EXPECT_FALSE(regular_linear_order_lift_check(*cg.monoid, core, rep));
  auto a = cyclic_subact(rep, cg["0_1"]);
  auto b = cyclic_subact(rep, cg["0_0"]);
  auto co = coproduct({&a.act, &b.act});
  EXPECT_FALSE(regular_linear_order_lift_check(*cg.monoid, core, co.act));
  auto rz = fixtures::rz2_plus1();
  EXPECT_THROW(regular_linear_order_lift_check(*rz.monoid, monoid_regular_core(rz.monoid),
                                               regular_representation(rz.monoid)),
               PreconditionFailed);
}
