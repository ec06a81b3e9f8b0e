#include <random>

#include <gtest/gtest.h>

#include "hardsq/natural.hpp"
#include "hardsq/poly.hpp"
#include "support/naive.hpp"

namespace hardsq {
namespace {

UniPoly uni(std::initializer_list<std::uint64_t> coeffs) {
  std::vector<UniPoly::Term> terms;
  std::uint32_t d = 0;
  for (auto k : coeffs) terms.emplace_back(d++, Natural(k));
  return UniPoly::from_terms(std::move(terms));
}

BiPoly bi(std::initializer_list<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>> t) {
  std::vector<BiPoly::Term> terms;
  for (auto [c, d, k] : t) terms.emplace_back(BiExponent{c, d}, Natural(k));
  return BiPoly::from_terms(std::move(terms));
}

TEST(Natural, ExactProductsBeyondSixtyFourBits) {
  const Natural two64 = Natural(1ULL << 32) * Natural(1ULL << 32);
  EXPECT_EQ((two64 * two64).to_string(), "340282366920938463463374607431768211456");
  EXPECT_EQ(two64.bit_length(), 65u);
  EXPECT_EQ(Natural().bit_length(), 0u);
  EXPECT_EQ(Natural(2).pow(100).to_string(), "1267650600228229401496703205376");
}

TEST(Natural, DecimalParsingIsStrict) {
  EXPECT_EQ(Natural::from_decimal("52521741712869136440040654451875316861275").to_string(),
            "52521741712869136440040654451875316861275");
  EXPECT_THROW(Natural::from_decimal("-1"), std::invalid_argument);
  EXPECT_THROW(Natural::from_decimal(""), std::invalid_argument);
  EXPECT_THROW(Natural::from_decimal("12a"), std::invalid_argument);
}

TEST(Natural, Ordering) {
  EXPECT_LT(Natural(3), Natural(4));
  EXPECT_EQ(Natural(7), Natural::from_decimal("7"));
  EXPECT_GT(Natural(2).pow(70), Natural(~0ULL));
}

TEST(PolyAdd, Examples) {
  EXPECT_EQ(uni({1, 1}) + UniPoly::monomial(1), uni({1, 2}));
  EXPECT_EQ(uni({1, 4, 2}) + UniPoly(), uni({1, 4, 2}));
  EXPECT_EQ(uni({1, 4, 2}) + uni({1, 1}), uni({2, 5, 2}));
}

TEST(PolyMul, Examples) {
  EXPECT_EQ(uni({1, 1}) * uni({1, 1}), uni({1, 2, 1}));
  EXPECT_EQ(uni({1, 4, 2}) * uni({1}), uni({1, 4, 2}));
  EXPECT_EQ(bi({{0, 0, 1}, {1, 0, 1}}) * bi({{0, 0, 1}, {0, 1, 1}}),
            bi({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
}

TEST(PolyEvalOnes, Examples) {
  EXPECT_EQ(uni({1, 4, 2}).eval_ones(), Natural(7));
  EXPECT_EQ(UniPoly().eval_ones(), Natural(0));
  EXPECT_EQ(bi({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}).eval_ones(), Natural(3));
}

TEST(Poly, ZeroCoefficientsAreNeverStored) {
  const auto p = UniPoly::from_terms({{3, Natural(0)}, {1, Natural(2)}, {1, Natural(0)}});
  ASSERT_EQ(p.term_count(), 1u);
  EXPECT_EQ(p.coefficient(1), Natural(2));
  EXPECT_EQ(p.coefficient(3), Natural(0));
  EXPECT_TRUE(UniPoly::monomial(4, Natural(0)).is_zero());
}

TEST(Poly, Degree) {
  EXPECT_FALSE(degree(UniPoly()).has_value());
  EXPECT_EQ(degree(uni({1, 4, 2})), 2u);
}

TEST(Poly, ProjectionAndSwap) {
  const auto q = bi({{0, 0, 1}, {1, 0, 2}, {0, 1, 2}, {1, 1, 2}});
  EXPECT_EQ(project_y0(q), uni({1, 2}));
  EXPECT_EQ(swap_xy(q), q);
  EXPECT_EQ(swap_xy(bi({{2, 1, 5}})), bi({{1, 2, 5}}));
}

TEST(PolyText, Rendering) {
  EXPECT_EQ(to_text(uni({1, 4, 2})), "1 + 4*z + 2*z^2");
  EXPECT_EQ(to_text(UniPoly()), "0");
  EXPECT_EQ(to_text(UniPoly::monomial(1)), "z");
  EXPECT_EQ(to_text(UniPoly::monomial(3, Natural(5))), "5*z^3");
  EXPECT_EQ(to_text(bi({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}})), "1 + x + y");
  EXPECT_EQ(to_text(bi({{0, 0, 1}, {1, 0, 2}, {0, 1, 2}, {1, 1, 2}})), "1 + 2*x + 2*y + 2*x*y");
  EXPECT_EQ(to_text(bi({{2, 3, 2}})), "2*x^2*y^3");
}

TEST(PolyJson, Rendering) {
  EXPECT_EQ(to_json(uni({1, 4, 2})), R"([{"d":0,"k":"1"},{"d":1,"k":"4"},{"d":2,"k":"2"}])");
  EXPECT_EQ(to_json(bi({{0, 1, 3}})), R"([{"c":0,"d":1,"k":"3"}])");
  EXPECT_EQ(to_json(UniPoly()), "[]");
}

TEST(PolyJson, RejectsMalformedCoefficients) {
  EXPECT_THROW(unipoly_from_json(R"([{"d":0,"k":5}])"), std::invalid_argument);
  EXPECT_THROW(unipoly_from_json(R"([{"d":0,"k":"-5"}])"), std::invalid_argument);
  EXPECT_THROW(unipoly_from_json(R"({"d":0})"), std::invalid_argument);
}

TEST(PolyProperty, JsonRoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::random_unipoly(rng);
    const auto q = testing::random_bipoly(rng);
    EXPECT_EQ(unipoly_from_json(to_json(p)), p);
    EXPECT_EQ(bipoly_from_json(to_json(q)), q);
  }
}

TEST(PolyProperty, SemiringLaws) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::random_bipoly(rng);
    const auto b = testing::random_bipoly(rng);
    const auto c = testing::random_bipoly(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(PolyProperty, EvalOnesIsAHomomorphism) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = testing::random_unipoly(rng);
    const auto q = testing::random_unipoly(rng);
    EXPECT_EQ((p * q).eval_ones(), p.eval_ones() * q.eval_ones());
    EXPECT_EQ((p + q).eval_ones(), p.eval_ones() + q.eval_ones());
  }
}

TEST(PolyProperty, ShiftMatchesMultiplicationByMonomial) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto q = testing::random_bipoly(rng);
    const BiExponent e{static_cast<std::uint32_t>(rng() % 4), static_cast<std::uint32_t>(rng() % 4)};
    const auto expected = q * BiPoly::monomial(e);
    EXPECT_EQ(q.shift(e), expected);
  }
}

}  // namespace
}  // namespace hardsq
