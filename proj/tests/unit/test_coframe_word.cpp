#include <gtest/gtest.h>

#include "foliage/coframe_word.hpp"
#include "test_util.hpp"

using namespace foliage;

TEST(CoframeWord, BidegreeFromIndexSets) {
  const CoframeWord w = CoframeWord::from_indices(2, {1, 2}, {2});
  EXPECT_EQ(w.holo_degree(), 2);
  EXPECT_EQ(w.anti_degree(), 1);
  EXPECT_EQ(w.degree(), 3);
  EXPECT_EQ(w.holo(), (std::vector<int>{1, 2}));
  EXPECT_EQ(w.anti(), (std::vector<int>{2}));
  EXPECT_EQ(CoframeWord::full(3).degree(), 6);
  EXPECT_EQ(CoframeWord::unit(3).degree(), 0);
}

TEST(CoframeWord, CanonicalOrderPutsHolomorphicFirst) {
  const CoframeWord w = CoframeWord::from_indices(2, {2}, {1});
  EXPECT_TRUE(w.contains(1));
  EXPECT_TRUE(w.contains(2));
  EXPECT_EQ(w.mask(), 0b0110u);
}

TEST(CoframeWord, InvalidIndicesThrow) {
  EXPECT_THROW(CoframeWord::from_indices(2, {3}, {}), ArgumentError);
  EXPECT_THROW(CoframeWord::from_indices(2, {1, 1}, {}), ArgumentError);
  EXPECT_THROW(CoframeWord(1, 0b100u), ArgumentError);
}

// Oracle: count inversions of the concatenated generator sequence directly.
TEST(CoframeWord, WedgeSignMatchesInversionCount) {
  for (std::uint32_t a = 0; a < 64; ++a)
    for (std::uint32_t b = 0; b < 64; ++b) {
      if (a & b) {
        EXPECT_EQ(wedge_sign(a, b), 0);
        continue;
      }
      std::vector<int> seq;
      for (int g = 0; g < 6; ++g)
        if (a >> g & 1u) seq.push_back(g);
      for (int g = 0; g < 6; ++g)
        if (b >> g & 1u) seq.push_back(g);
      int inv = 0;
      for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j) inv += seq[i] > seq[j];
      EXPECT_EQ(wedge_sign(a, b), inv % 2 ? -1 : 1) << a << " " << b;
    }
}

TEST(CoframeWord, RemovalSignCountsPrecedingGenerators) {
  EXPECT_EQ(removal_sign(0b1011u, 0), 1);
  EXPECT_EQ(removal_sign(0b1011u, 1), -1);
  EXPECT_EQ(removal_sign(0b1011u, 3), 1);
}

TEST(CoframeWord, FiberWordsCoverEachComponent) {
  EXPECT_EQ(fiber_words(2).size(), 16u);
  EXPECT_EQ(fiber_words(2, Component::degree(2)).size(), 6u);
  EXPECT_EQ(fiber_words(2, Component::bidegree(1, 1)).size(), 4u);
  EXPECT_EQ(fiber_words(3, Component::bidegree(2, 1)).size(), 9u);
  for (const CoframeWord& w : fiber_words(2, Component::bidegree(1, 0))) EXPECT_EQ(w.holo_degree(), 1);
}
