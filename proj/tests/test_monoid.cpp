#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

using namespace actlab;
using support::table_of;

namespace {

  ElementSet to_set(oracle::Set const& s) {
    return ElementSet(std::vector<Elem>(s.begin(), s.end()));
  }

}  // namespace

TEST(ValidateMonoid, TrivialTable) {
  auto m = validate_monoid(1, {0});
  EXPECT_EQ(m.order(), 1u);
  EXPECT_EQ(m.identity(), 0u);
}

TEST(ValidateMonoid, FindsIdentityOfRightZeroPlusOne) {
  auto m = validate_monoid(3, {0, 1, 2, 1, 1, 2, 2, 1, 2});
  EXPECT_EQ(m.identity(), 0u);
}

TEST(ValidateMonoid, IdentityFoundAwayFromZero) {
  // {a, 1} with a·a = a, identity at index 1.
  auto m = validate_monoid(2, {0, 0, 0, 1});
  EXPECT_EQ(m.identity(), 1u);
}

TEST(ValidateMonoid, RejectsNonAssociative) {
  // x·y = y, y·x = 1: (x·y)·x = 1 while x·(y·x) = x.
  EXPECT_THROW(validate_monoid(3, {0, 1, 2, 1, 1, 2, 2, 0, 2}), NonAssociative);
}

TEST(ValidateMonoid, RejectsMissingIdentityAndRange) {
  EXPECT_THROW(validate_monoid(2, {0, 0, 0, 0}), NoIdentity);
  EXPECT_THROW(validate_monoid(2, {0, 1, 1, 7}), OutOfRange);
}

TEST(Idempotents, Fixtures) {
  EXPECT_EQ(idempotents(*fixtures::trivial().monoid), (ElementSet{0}));
  EXPECT_EQ(idempotents(*fixtures::rz2_plus1().monoid), (ElementSet{0, 1, 2}));
  auto cg = fixtures::cg21();
  EXPECT_EQ(idempotents(*cg.monoid), (ElementSet{cg["1"], cg["0_0"], cg["0_1"]}));
}

TEST(Ideals, FixtureValues) {
  auto rz = fixtures::rz2_plus1();
  EXPECT_EQ(left_ideal(*rz.monoid, rz["x"]), (ElementSet{rz["x"]}));
  EXPECT_EQ(left_ideal(*rz.monoid, rz["1"]), (ElementSet{0, 1, 2}));
  auto cg = fixtures::cg21();
  EXPECT_EQ(left_ideal(*cg.monoid, cg["0_1"]), (ElementSet{cg["0_0"], cg["1_0"], cg["0_1"], cg["1_1"]}));
}

TEST(Ideals, AgreeWithOracleOnCorpus) {
  for (auto const& [name, m] : support::corpus_monoids()) {
    auto t = table_of(*m);
    for (Elem a = 0; a < m->order(); ++a) {
      EXPECT_EQ(left_ideal(*m, a), to_set(oracle::left(t, a))) << name;
      EXPECT_EQ(right_ideal(*m, a), to_set(oracle::right(t, a))) << name;
    }
    std::vector<Elem> idem;
    for (auto e : oracle::idempotents(t)) {
      idem.push_back(e);
    }
    EXPECT_EQ(idempotents(*m), ElementSet(idem)) << name;
  }
}

TEST(Depth, FixtureValues) {
  EXPECT_EQ(depth(*fixtures::trivial().monoid), 1u);
  EXPECT_EQ(depth(*fixtures::cg21().monoid), 3u);
  EXPECT_EQ(depth(*fixtures::layered_z2().monoid), 3u);
  EXPECT_EQ(ideal_poset(*fixtures::trivial().monoid).ideals.size(), 1u);
}

TEST(Depth, AgreesWithOracleAndSurvivesRelabelling) {
  std::mt19937_64 rng(7);
  for (auto const& [name, m] : support::corpus_monoids()) {
    EXPECT_EQ(depth(*m), oracle::depth(table_of(*m))) << name;
    std::vector<Elem> perm(m->order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(depth(relabel(*m, perm)), depth(*m)) << name;
  }
}

TEST(Kernel, FixtureValues) {
  EXPECT_EQ(kernel(*fixtures::trivial().monoid), (ElementSet{0}));
  auto rz = fixtures::rz2_plus1();
  EXPECT_EQ(kernel(*rz.monoid), (ElementSet{rz["x"], rz["y"]}));
  auto cg = fixtures::cg21();
  EXPECT_EQ(kernel(*cg.monoid), (ElementSet{cg["0_0"], cg["1_0"]}));
  EXPECT_TRUE(is_minimal_left_ideal(*rz.monoid, ElementSet{rz["x"]}));
  EXPECT_FALSE(is_minimal_left_ideal(*rz.monoid, ElementSet{0, 1, 2}));
}

TEST(Kernel, AgreesWithOracleOnCorpus) {
  for (auto const& [name, m] : support::corpus_monoids()) {
    EXPECT_EQ(kernel(*m), to_set(oracle::kernel(table_of(*m)))) << name;
  }
}

TEST(GroupComponent, Fixtures) {
  auto rz = fixtures::rz2_plus1();
  EXPECT_EQ(group_component(*rz.monoid, rz["x"]).members, (ElementSet{rz["x"]}));
  EXPECT_THROW(group_component(*rz.monoid, rz["1"]), IdealNotMinimal);
  auto b = fixtures::b22_plus1();
  EXPECT_EQ(group_component(*b.monoid, b["<0,0,0>"]).members.size(), 2u);
  auto cg = fixtures::cg21();
  EXPECT_THROW(group_component(*cg.monoid, cg["1_0"]), NotIdempotent);
}

TEST(RectBand, B22BandPart) {
  auto b    = fixtures::b22_plus1();
  auto band = ElementSet::range(b.monoid->order()).minus(ElementSet{b["1"]});
  auto res  = rect_band_decompose(*b.monoid, band);
  ASSERT_TRUE(std::holds_alternative<RectBandDecomposition>(res));
  auto const& d = std::get<RectBandDecomposition>(res);
  EXPECT_EQ(d.rows, 2u);
  EXPECT_EQ(d.cols, 2u);
  EXPECT_EQ(d.group_orders(), (std::vector<std::size_t>{2, 2, 2, 2}));
  EXPECT_TRUE(band_fact_violations(*b.monoid, d).empty());
  // units multiply like a rectangular band: e_ij·e_kj = e_ij, e_ij·e_il = e_il
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_EQ(b.monoid->mul(d.unit(i, j), d.unit(k, j)), d.unit(i, j));
        EXPECT_EQ(b.monoid->mul(d.unit(i, j), d.unit(i, k)), d.unit(i, k));
      }
}

TEST(RectBand, CellsObeyProductLawExhaustively) {
  auto b    = fixtures::b22_plus1();
  auto band = ElementSet::range(b.monoid->order()).minus(ElementSet{b["1"]});
  auto d    = std::get<RectBandDecomposition>(rect_band_decompose(*b.monoid, band));
  for (auto x : band)
    for (auto y : band) {
      auto xy = b.monoid->mul(x, y);
      EXPECT_EQ(d.row_of[xy], d.row_of[x]);
      EXPECT_EQ(d.col_of[xy], d.col_of[y]);
    }
}

TEST(RectBand, KernelOfCg21IsOneGroup) {
  auto cg  = fixtures::cg21();
  auto res = rect_band_decompose(*cg.monoid, kernel(*cg.monoid));
  ASSERT_TRUE(std::holds_alternative<RectBandDecomposition>(res));
  auto const& d = std::get<RectBandDecomposition>(res);
  EXPECT_EQ(d.rows * d.cols, 1u);
  EXPECT_EQ(d.group_orders(), (std::vector<std::size_t>{2}));
}

TEST(RectBand, IdentityBreaksTheBand) {
  auto rz  = fixtures::rz2_plus1();
  auto res = rect_band_decompose(*rz.monoid, ElementSet{rz["1"], rz["x"]});
  EXPECT_TRUE(std::holds_alternative<BandFailure>(res));
}

TEST(RectBand, NotSubsemigroupRejected) {
  auto cg = fixtures::cg21();
  // 1_0·1_0 = 0_0 is missing
  EXPECT_THROW(rect_band_decompose(*cg.monoid, ElementSet{cg["1_0"]}), NotSubsemigroup);
}

TEST(RectBand, KernelDecomposesOnCorpus) {
  for (auto const& [name, m] : support::corpus_monoids()) {
    EXPECT_TRUE(check_kernel_band(*m).empty()) << name;
  }
}

TEST(ColumnNormalForm, TwoRowsOneColumn) {
  auto c    = fixtures::column_band_z2();
  auto band = ElementSet::range(c.monoid->order()).minus(ElementSet{c["1"]});
  auto d    = std::get<RectBandDecomposition>(rect_band_decompose(*c.monoid, band));
  ASSERT_EQ(d.cols, 1u);
  ASSERT_EQ(d.rows, 2u);
  auto nf = band_normal_form_single_column(*c.monoid, d);
  ASSERT_EQ(nf.image.size(), 4u);
  EXPECT_EQ(ElementSet(nf.image), band);
  // ⟨c,i⟩·⟨d,k⟩ = ⟨c·d,i⟩ is carried onto the band product, on all 16 pairs
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y) {
      EXPECT_EQ(c.monoid->mul(nf.image[x], nf.image[y]), nf.image[nf.pair_product(x, y, *c.monoid)]);
    }
}

TEST(ColumnNormalForm, RejectsTwoColumns) {
  auto b    = fixtures::b22_plus1();
  auto band = ElementSet::range(b.monoid->order()).minus(ElementSet{b["1"]});
  auto d    = std::get<RectBandDecomposition>(rect_band_decompose(*b.monoid, band));
  EXPECT_THROW(band_normal_form_single_column(*b.monoid, d), NotSingleColumn);
}

TEST(LinearOrder, Fixtures) {
  auto cg = fixtures::cg21();
  EXPECT_TRUE(is_linearly_ordered(*cg.monoid));
  auto rz = fixtures::rz2_plus1();
  auto f  = linear_order_failure(*rz.monoid);
  ASSERT_TRUE(f);
  EXPECT_EQ((ElementSet{f->b, f->c}), (ElementSet{rz["x"], rz["y"]}));
  auto rf = regular_linear_order_failure(*rz.monoid, monoid_regular_core(rz.monoid));
  ASSERT_TRUE(rf);
  EXPECT_EQ(rf->a, rz["1"]);
  auto tr = fixtures::trivial();
  EXPECT_TRUE(is_linearly_ordered(*tr.monoid));
  EXPECT_TRUE(is_regularly_linearly_ordered(*tr.monoid, ElementSet{0}));
}

TEST(LinearOrder, MatchesPairwiseComparabilityOracle) {
  for (auto const& [name, m] : support::corpus_monoids()) {
    auto t     = table_of(*m);
    bool chain = true;
    for (Elem a = 0; a < m->order(); ++a)
      for (Elem b = 0; b < m->order(); ++b) {
        auto la = oracle::left(t, a), lb = oracle::left(t, b);
        chain = chain && (oracle::subset(la, lb) || oracle::subset(lb, la));
      }
    EXPECT_EQ(is_linearly_ordered(*m), chain) << name;
  }
}

// aS ⊆ eS ⟺ ea = a and Sa ⊆ Se ⟺ ae = a, checked from raw tables.
TEST(IdealLaws, ContainmentMatchesAbsorptionOnCorpus) {
  for (auto const& [name, m] : support::corpus_monoids()) {
    auto t = table_of(*m);
    for (auto e : oracle::idempotents(t)) {
      for (oracle::U a = 0; a < t.n; ++a) {
        EXPECT_EQ(oracle::subset(oracle::right(t, a), oracle::right(t, e)), t.mul(e, a) == a) << name;
        EXPECT_EQ(oracle::subset(oracle::left(t, a), oracle::left(t, e)), t.mul(a, e) == a) << name;
      }
      for (auto f : oracle::idempotents(t)) {
        if (oracle::subset(oracle::left(t, e), oracle::left(t, f))
            && oracle::subset(oracle::right(t, f), oracle::right(t, e))) {
          EXPECT_EQ(e, f) << name;
        }
      }
    }
    EXPECT_TRUE(check_ideal_laws(*m).empty()) << name;
  }
}
