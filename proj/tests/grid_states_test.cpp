#include <set>

#include <gtest/gtest.h>

#include "hardsq/grid_states.hpp"
#include "support/naive.hpp"

namespace hardsq {
namespace {

TEST(BarState, IndexBijection) {
  for (Mode mode : {Mode::Ivs, Mode::Bivs}) {
    for (unsigned p = 1; p <= 6; ++p) {
      for (std::uint64_t i = 1; i <= state_count(mode, p); ++i) {
        const auto s = BarState::from_index(mode, p, i);
        ASSERT_EQ(s.index(), i);
        ASSERT_EQ(s.is_trivial(), i == 1);
      }
    }
  }
}

TEST(BarState, RightmostColumnIsMostSignificant) {
  // Reading order is right to left, so "10" has a 1 in the rightmost column.
  const auto s = BarState::parse(Mode::Ivs, "10");
  EXPECT_EQ(s.digit(1), 1);
  EXPECT_EQ(s.digit(0), 0);
  EXPECT_EQ(s.index(), 3u);
  EXPECT_EQ(BarState::from_index(Mode::Bivs, 2, 8).reading(), "21");
  EXPECT_EQ(BarState::trivial(Mode::Ivs, 4).reading(), "0000");
}

TEST(BarState, RejectsBadInput) {
  EXPECT_THROW(BarState::parse(Mode::Ivs, "12"), std::invalid_argument);
  EXPECT_THROW(BarState::from_index(Mode::Ivs, 2, 5), std::out_of_range);
  EXPECT_THROW(BarState::from_index(Mode::Ivs, 2, 0), std::out_of_range);
}

TEST(Tiles, IvsLabelTable) {
  const auto t = tiles(Mode::Ivs);
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[0].letter, 'a');
  EXPECT_EQ(t[1].letter, 'b');
  EXPECT_EQ(t[1].bottom, 1);
  EXPECT_EQ(t[1].top, 0);
  EXPECT_EQ(t[1].weight, (Weight{1, 0}));
  EXPECT_EQ(t[2].bottom, 0);
  EXPECT_EQ(t[2].top, 1);
}

TEST(Tiles, BivsLabelTable) {
  const std::string letters = "abcdefg";
  const std::vector<std::pair<int, int>> labels{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
  const std::vector<Weight> weights{{0, 0}, {0, 0}, {0, 0}, {1, 0}, {1, 0}, {0, 1}, {0, 1}};
  const auto t = tiles(Mode::Bivs);
  ASSERT_EQ(t.size(), 7u);
  for (unsigned k = 0; k < 7; ++k) {
    EXPECT_EQ(t[k].id, k + 1);
    EXPECT_EQ(t[k].letter, letters[k]);
    EXPECT_EQ(t[k].bottom, labels[k].first);
    EXPECT_EQ(t[k].top, labels[k].second);
    EXPECT_EQ(t[k].weight, weights[k]);
  }
}

TEST(Tiles, ForbiddenHorizontalPairs) {
  auto forbidden = [](Mode mode) {
    std::set<std::string> out;
    for (const auto& l : tiles(mode)) {
      for (const auto& r : tiles(mode)) {
        if (!horizontally_compatible(mode, l, r)) out.insert(std::string{l.letter, r.letter});
      }
    }
    return out;
  };
  EXPECT_EQ(forbidden(Mode::Ivs), (std::set<std::string>{"bb", "cc"}));
  EXPECT_EQ(forbidden(Mode::Bivs), (std::set<std::string>{"bb", "cc", "dd", "ee", "ff", "gg", "bg", "gb", "ce",
                                                           "ec", "de", "ed", "fg", "gf"}));
}

TEST(ReadState, SingleTiles) {
  const Mosaic t2(Mode::Ivs, 1, 1, {2});
  EXPECT_EQ(t2.read_bar_state(Side::Bottom).reading(), "1");
  EXPECT_EQ(t2.read_bar_state(Side::Top).reading(), "0");
  EXPECT_EQ(t2.read_letters(Side::Right), "b");
  const Mosaic t1(Mode::Ivs, 1, 1, {1});
  EXPECT_EQ(t1.read_bar_state(Side::Bottom).reading(), "0");
  EXPECT_EQ(t1.read_bar_state(Side::Top).reading(), "0");
}

TEST(ReadState, BottomStateReadsRightToLeft) {
  const Mosaic m(Mode::Ivs, 2, 1, {2, 1});  // T2 in column 1, T1 in column 2
  EXPECT_EQ(m.read_bar_state(Side::Bottom).reading(), "01");
}

TEST(ReadState, FourByThreeExample) {
  // Columns bottom-to-top: [T3 T2 T1] [T2 T1 T3] [T1 T1 T1] [T2 T1 T1].
  const auto m = Mosaic::parse(Mode::Ivs,
                               "T1 T3 T1 T1\n"
                               "T2 T1 T1 T1\n"
                               "T3 T2 T1 T2\n");
  EXPECT_TRUE(m.suitably_adjacent());
  EXPECT_EQ(m.read_bar_state(Side::Bottom).reading(), "1010");
  EXPECT_EQ(m.read_bar_state(Side::Top).reading(), "0010");
  EXPECT_EQ(m.read_letters(Side::Left), "abc");
  EXPECT_EQ(m.read_letters(Side::Right), "aab");
  EXPECT_FALSE(m.is_valid_mosaic());
}

TEST(Mosaic, TextRoundTrip) {
  const std::string text = "T1 T3\nT2 T1\n";
  EXPECT_EQ(Mosaic::parse(Mode::Ivs, text).to_text(), text);
  EXPECT_THROW(Mosaic::parse(Mode::Ivs, "T1 T2\nT1\n"), std::invalid_argument);
  EXPECT_THROW(Mosaic::parse(Mode::Ivs, "T4\n"), std::out_of_range);
  EXPECT_THROW(Mosaic::parse(Mode::Ivs, "X1\n"), std::invalid_argument);
}

TEST(IsIvsMosaic, Examples) {
  EXPECT_TRUE(is_ivs_mosaic(Mosaic(Mode::Ivs, 1, 1, {1})));
  EXPECT_FALSE(is_ivs_mosaic(Mosaic(Mode::Ivs, 1, 1, {3})));
  EXPECT_FALSE(is_ivs_mosaic(Mosaic(Mode::Ivs, 2, 1, {2, 2})));
  // T2 directly above T3 shares label 1 on the abutting edge.
  EXPECT_TRUE(is_ivs_mosaic(Mosaic(Mode::Ivs, 1, 2, {3, 2})));
  EXPECT_FALSE(is_ivs_mosaic(Mosaic(Mode::Ivs, 1, 2, {2, 2})));
}

TEST(MosaicWeight, Examples) {
  EXPECT_EQ(to_unipoly(Mosaic(Mode::Ivs, 3, 2).weight()), UniPoly::constant(Natural(1)));
  EXPECT_EQ(to_unipoly(Mosaic(Mode::Ivs, 1, 1, {2}).weight()), UniPoly::monomial(1));
  // BIVS column: T4 (white, top 0) below T1.
  const Mosaic column(Mode::Bivs, 1, 2, {4, 1});
  EXPECT_TRUE(column.is_valid_mosaic());
  EXPECT_EQ(to_bipoly(column.weight()), BiPoly::monomial({1, 0}));
  // T6 below T7 has labels 0 and 2 on the shared edge.
  EXPECT_FALSE(Mosaic(Mode::Bivs, 1, 2, {6, 7}).suitably_adjacent());
}

TEST(RowCompatible, Examples) {
  EXPECT_TRUE(row_compatible(BarState::parse(Mode::Ivs, "10"), BarState::parse(Mode::Ivs, "01")));
  EXPECT_FALSE(row_compatible(BarState::parse(Mode::Ivs, "11"), BarState::parse(Mode::Ivs, "00")));
  EXPECT_TRUE(row_compatible(BarState::parse(Mode::Bivs, "12"), BarState::parse(Mode::Bivs, "00")));
  EXPECT_FALSE(row_compatible(BarState::parse(Mode::Bivs, "20"), BarState::parse(Mode::Bivs, "20")));
  EXPECT_TRUE(row_compatible(BarState::parse(Mode::Bivs, "20"), BarState::parse(Mode::Bivs, "10")));
  EXPECT_THROW(row_compatible(BarState::parse(Mode::Ivs, "1"), BarState::parse(Mode::Ivs, "10")),
               std::invalid_argument);
}

// Every compatible (bottom, top) pair is realized by exactly one bar mosaic,
// and no bar mosaic realizes an incompatible pair.
TEST(RowCompatible, MatchesBarMosaicEnumeration) {
  for (Mode mode : {Mode::Ivs, Mode::Bivs}) {
    for (unsigned p = 1; p <= 6; ++p) {
      std::map<std::pair<std::uint64_t, std::uint64_t>, int> realized;
      for (const auto& bar : testing::bar_mosaics(mode, p)) {
        ++realized[{testing::bottom_index(mode, bar), testing::top_index(mode, bar)}];
      }
      const auto states = state_count(mode, p);
      for (std::uint64_t i = 1; i <= states; ++i) {
        for (std::uint64_t j = 1; j <= states; ++j) {
          const bool compatible =
              row_compatible(BarState::from_index(mode, p, i), BarState::from_index(mode, p, j));
          const auto it = realized.find({i, j});
          const int count = it == realized.end() ? 0 : it->second;
          ASSERT_EQ(count, compatible ? 1 : 0) << to_string(mode) << " p=" << p << " i=" << i << " j=" << j;
        }
      }
    }
  }
}

}  // namespace
}  // namespace hardsq
