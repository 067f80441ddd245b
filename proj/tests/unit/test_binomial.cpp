#include <gtest/gtest.h>

#include "artinian/binomial.hpp"
#include "artinian/error.hpp"
#include "support/oracles.hpp"

using namespace artinian;

TEST(Binom, SmallValues) {
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(7, 4), 35);
  EXPECT_EQ(binom(3, 5), 0);
  EXPECT_EQ(binom(5, -1), 0);
}

TEST(Binom, MatchesPascalGrid) {
  for (long n = 0; n <= 40; ++n)
    for (long k = 0; k <= 42; ++k) ASSERT_EQ(binom(n, k), oracle::binom(n, k)) << n << " " << k;
}

TEST(Binom, LargeArgumentsStayExact) {
  // C(100, 50) overflows 64 bits.
  EXPECT_EQ(binom(100, 50).get_str(), "100891344545564193334812497256");
}

TEST(RingDim, KnownValues) {
  EXPECT_EQ(ring_dim(4, 4), 35);
  EXPECT_EQ(ring_dim(3, 5), 21);
  for (int r = 1; r <= 6; ++r) EXPECT_EQ(ring_dim(r, 0), 1);
  EXPECT_EQ(ring_dim(2, 7), 8);
}

TEST(Expand, KnownExpansions) {
  const auto e1 = expand(6, 4);
  EXPECT_EQ(e1.terms, (std::vector<BinomialTerm>{{5, 4}, {3, 3}}));
  const auto e2 = expand(13, 5);
  EXPECT_EQ(e2.terms, (std::vector<BinomialTerm>{{6, 5}, {5, 4}, {3, 3}, {2, 2}}));
  for (int i = 1; i <= 8; ++i) EXPECT_EQ(expand(1, i).terms, (std::vector<BinomialTerm>{{i, i}}));
}

TEST(Expand, RejectsNonPositive) {
  EXPECT_THROW(expand(0, 3), Error);
  EXPECT_THROW(expand(5, 0), Error);
}

TEST(Expand, UniquenessInvariantsOnGrid) {
  for (long n = 1; n <= 500; ++n) {
    for (int i = 1; i <= 8; ++i) {
      const auto ex = expand(n, i);
      ASSERT_EQ(ex.index, i);
      Integer sum = 0;
      int expected_bottom = i;
      Integer prev_top = -1;
      for (const auto& t : ex.terms) {
        ASSERT_EQ(t.bottom, expected_bottom--);
        ASSERT_GE(t.top, t.bottom);
        if (prev_top >= 0) ASSERT_LT(t.top, prev_top);
        prev_top = t.top;
        sum += binom(t.top, t.bottom);
      }
      ASSERT_GE(ex.terms.back().bottom, 1);
      ASSERT_EQ(sum, n);
      const auto ref = oracle::expand(n, i);
      ASSERT_EQ(ref.size(), ex.terms.size());
      for (std::size_t k = 0; k < ref.size(); ++k) ASSERT_EQ(ex.terms[k].top, ref[k].first);
    }
  }
}

TEST(Shift, KnownShifts) {
  EXPECT_EQ(shift(expand(13, 5), -1), 11);
  EXPECT_EQ(shift(expand(6, 4), -1), 5);
  EXPECT_EQ(shift(expand(15, 4), 1), 21);
  EXPECT_THROW(shift(expand(15, 4), 2), Error);
  EXPECT_THROW(shift(expand(15, 4), 0), Error);
}

TEST(Shift, BottomOneDownShiftCountsOne) {
  // 3_(1) = C(3,1); shifting down gives C(2,0) = 1.
  EXPECT_EQ(shift(expand(3, 1), -1), 1);
}

TEST(MacaulayGrowth, KnownValues) {
  EXPECT_EQ(macaulay_growth(5, 2), 7);
  EXPECT_EQ(macaulay_growth(15, 4), 21);
  EXPECT_EQ(macaulay_growth(0, 3), 0);
  for (int d = 1; d <= 8; ++d) EXPECT_EQ(macaulay_growth(1, d), 1);
  EXPECT_THROW(macaulay_growth(3, 0), Error);
}

TEST(MacaulayGrowth, MatchesOracleAndIsMonotone) {
  for (int d = 1; d <= 8; ++d) {
    Integer prev = 0;
    for (long n = 1; n <= 500; ++n) {
      const auto g = macaulay_growth(n, d);
      ASSERT_EQ(g, oracle::growth(n, d)) << n << " " << d;
      ASSERT_GE(g, prev);
      prev = g;
    }
  }
}

TEST(MacaulayGrowth, GenericDimensionsGrowGenerically) {
  for (int r = 1; r <= 6; ++r)
    for (int d = 1; d <= 8; ++d) EXPECT_EQ(macaulay_growth(ring_dim(r, d), d), ring_dim(r, d + 1));
}

TEST(MacaulayLower, KnownValues) {
  EXPECT_EQ(macaulay_lower(13, 5), 11);
  EXPECT_EQ(macaulay_lower(6, 4), 5);
  for (int b = 2; b <= 7; ++b) EXPECT_EQ(macaulay_lower(1, b), 1);
  EXPECT_THROW(macaulay_lower(5, 1), Error);
  EXPECT_THROW(macaulay_lower(0, 3), Error);
}

TEST(MacaulayLower, AdjunctionWithGrowth) {
  for (long a = 1; a <= 300; ++a) {
    for (int b = 2; b <= 7; ++b) {
      const auto s = macaulay_lower(a, b);
      ASSERT_LE(a, macaulay_growth(s, b - 1)) << a << " " << b;
      if (s > 1) ASSERT_GT(a, macaulay_growth(s - 1, b - 1)) << a << " " << b;
      ASSERT_EQ(s, oracle::lower(a, b));
    }
  }
}

TEST(OSequence, Examples) {
  EXPECT_TRUE(is_o_sequence(make_hvector({1, 3, 6, 10, 15, 17, 6, 1})));
  EXPECT_TRUE(is_o_sequence(make_hvector({1, 3, 6, 5, 6, 3, 1})));
  EXPECT_FALSE(is_o_sequence(make_hvector({2, 1})));
  EXPECT_FALSE(is_o_sequence(make_hvector({1, 2, 4})));
  EXPECT_FALSE(is_o_sequence(make_hvector({1, 1, 2})));
}

TEST(OSequence, ZerosEndTheAlgebra) {
  EXPECT_TRUE(is_o_sequence(make_hvector({1, 2, 1, 0, 0})));
  EXPECT_FALSE(is_o_sequence(make_hvector({1, 2, 0, 1})));
}

TEST(HilbertOracle, OneVariable) {
  const std::set<HVector> expected{make_hvector({1}), make_hvector({1, 1}), make_hvector({1, 1, 1})};
  EXPECT_EQ(enumerate_hilbert_functions(1, 2), expected);
}

TEST(HilbertOracle, TwoVariablesDegreeTwo) {
  const auto all = enumerate_hilbert_functions(2, 2);
  EXPECT_TRUE(all.count(make_hvector({1, 2, 3})));
  EXPECT_TRUE(all.count(make_hvector({1, 2, 1})));
  EXPECT_FALSE(all.count(make_hvector({1, 2, 4})));
}

TEST(HilbertOracle, RejectsOutOfRange) {
  EXPECT_THROW(enumerate_hilbert_functions(4, 2), Error);
  EXPECT_THROW(enumerate_hilbert_functions(2, 5), Error);
  EXPECT_THROW(enumerate_hilbert_functions(0, 2), Error);
}

TEST(HilbertOracle, EqualsOSequencesAtDeskScale) {
  for (auto [r, e] : {std::pair{1, 3}, {2, 3}, {2, 4}, {3, 3}, {1, 4}, {3, 2}})
    EXPECT_EQ(enumerate_hilbert_functions(r, e), o_sequences_up_to(r, e)) << r << " " << e;
}
