#include <gtest/gtest.h>

#include "hardsq/engine_options.hpp"
#include "hardsq/oracle.hpp"
#include "support/naive.hpp"

namespace hardsq {
namespace {

TEST(GridGraph, Counts) {
  EXPECT_EQ((oracle::GridGraph{1, 1}.edge_count()), 0u);
  EXPECT_EQ((oracle::GridGraph{3, 4}.vertex_count()), 12u);
  for (unsigned m = 1; m <= 6; ++m) {
    for (unsigned n = 1; n <= 6; ++n) {
      EXPECT_EQ((oracle::GridGraph{m, n}.edge_count()), testing::grid_edges(m, n).size());
    }
  }
}

TEST(BruteIvs, Examples) {
  EXPECT_EQ(to_text(oracle::brute_ivs(1, 1)), "1 + z");
  EXPECT_EQ(to_text(oracle::brute_ivs(2, 2)), "1 + 4*z + 2*z^2");
  EXPECT_EQ(oracle::brute_ivs(3, 3).eval_ones(), Natural(63));
}

TEST(BruteBivs, Examples) {
  EXPECT_EQ(to_text(oracle::brute_bivs(1, 1)), "1 + x + y");
  EXPECT_EQ(to_text(oracle::brute_bivs(1, 2)), "1 + 2*x + 2*y + 2*x*y");
  EXPECT_EQ(oracle::brute_bivs(2, 2).eval_ones(), Natural(35));
}

TEST(BruteMosaics, Examples) {
  EXPECT_EQ(project_y0(oracle::brute_mosaics(Mode::Ivs, 1, 1)), oracle::brute_ivs(1, 1));
  EXPECT_TRUE(project_y0(oracle::brute_mosaics(Mode::Ivs, 2, 1)).coefficient(2).is_zero());
  EXPECT_EQ(to_text(oracle::brute_mosaics(Mode::Bivs, 1, 1)), "1 + x + y");
}

TEST(BruteIvs, MatchesNaiveEnumeration) {
  for (unsigned m = 1; m <= 5; ++m) {
    for (unsigned n = 1; m * n <= 16; ++n) {
      ASSERT_EQ(oracle::brute_ivs(m, n), testing::to_poly(testing::naive_ivs(m, n))) << m << "x" << n;
    }
  }
}

TEST(BruteBivs, MatchesNaiveEnumeration) {
  for (unsigned m = 1; m <= 4; ++m) {
    for (unsigned n = 1; m * n <= 9; ++n) {
      ASSERT_EQ(oracle::brute_bivs(m, n), testing::to_poly(testing::naive_bivs(m, n))) << m << "x" << n;
    }
  }
}

// Mosaics and vertex subsets are in one-to-one, weight-preserving correspondence.
TEST(BruteMosaics, ConversionIvs) {
  for (unsigned m = 1; m <= 9; ++m) {
    for (unsigned n = 1; m * n <= 9; ++n) {
      const auto mosaics = oracle::brute_mosaics(Mode::Ivs, m, n);
      ASSERT_EQ(mosaics.eval_ones(), project_y0(mosaics).eval_ones());  // no y terms
      ASSERT_EQ(project_y0(mosaics), oracle::brute_ivs(m, n)) << m << "x" << n;
    }
  }
}

TEST(BruteMosaics, ConversionBivs) {
  for (unsigned m = 1; m <= 6; ++m) {
    for (unsigned n = 1; m * n <= 6; ++n) {
      ASSERT_EQ(oracle::brute_mosaics(Mode::Bivs, m, n), oracle::brute_bivs(m, n)) << m << "x" << n;
    }
  }
}

TEST(BruteIvs, LowCoefficientsAndDegree) {
  for (unsigned m = 1; m <= 6; ++m) {
    for (unsigned n = 1; m * n <= 20; ++n) {
      const auto p = oracle::brute_ivs(m, n);
      ASSERT_EQ(p.coefficient(0), Natural(1));
      ASSERT_EQ(p.coefficient(1), Natural(m * n));
      ASSERT_EQ(degree(p), (m * n + 1) / 2) << m << "x" << n;
    }
  }
}

TEST(BruteIvs, ResultIndependentOfThreadCount) {
  EXPECT_EQ(oracle::brute_ivs(4, 5, 1), oracle::brute_ivs(4, 5, 4));
}

TEST(Oracle, GuardsAreHardErrors) {
  EXPECT_THROW(oracle::brute_ivs(5, 5), CapExceeded);
  EXPECT_THROW(oracle::brute_bivs(4, 4), CapExceeded);
  EXPECT_THROW(oracle::brute_mosaics(Mode::Ivs, 4, 5), CapExceeded);
  EXPECT_THROW(oracle::brute_mosaics(Mode::Bivs, 3, 4), CapExceeded);
  EXPECT_THROW(oracle::brute_ivs(0, 5), std::invalid_argument);
}

}  // namespace
}  // namespace hardsq
