// Copyright 2026 The anlgmap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <set>
#include <thread>

#include "anlgmap/parallel.hpp"
#include "anlgmap/rng.hpp"
#include "anlgmap/text.hpp"

using namespace anlgmap;

TEST(Text, SplitKeepsEmptyFields) {
  auto parts = split("a\t\tb", '\t');
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[1], "");
  EXPECT_EQ(parts[2], "b");
}

TEST(Text, RstripAndSingleToken) {
  EXPECT_EQ(rstrip("abc \r\n"), "abc");
  EXPECT_TRUE(is_single_token("paris"));
  EXPECT_FALSE(is_single_token("new york"));
  EXPECT_FALSE(is_single_token(""));
}

TEST(Text, NfcComposes) {
  EXPECT_EQ(nfc("e\xCC\x81"), "\xC3\xA9");
  EXPECT_EQ(nfc("plain"), "plain");
}

TEST(Rng, DeterministicPerSeed) {
  Rng a(42), b(42), c(43);
  for (int i = 0; i < 100; ++i) {
    double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
  EXPECT_NE(Rng(42).next_u64(), c.next_u64());
  EXPECT_NE(Rng::derive(1, 0), Rng::derive(1, 1));
  EXPECT_EQ(Rng::derive(1, 5), Rng::derive(1, 5));
}

TEST(Rng, NormalMoments) {
  Rng rng(7);
  double sum = 0, sq = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.02);
}

TEST(Rng, BelowCoversRange) {
  Rng rng(3);
  std::set<std::size_t> seen;
  for (int i = 0; i < 1000; ++i) {
    auto v = rng.below(7);
    EXPECT_LT(v, 7u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
}

TEST(Rng, ShuffleIsPermutation) {
  std::vector<int> v{0, 1, 2, 3, 4, 5, 6, 7};
  Rng rng(9);
  rng.shuffle(v);
  std::multiset<int> s(v.begin(), v.end());
  EXPECT_EQ(s, (std::multiset<int>{0, 1, 2, 3, 4, 5, 6, 7}));
}

TEST(ParallelFor, FillsEverySlotAndRethrowsLowestIndex) {
  std::vector<int> out(100, 0);
  parallel_for(out.size(), 4, [&](std::size_t i) { out[i] = static_cast<int>(i) * 2; });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<int>(i) * 2);
  try {
    parallel_for(50, 3, [](std::size_t i) {
      if (i == 10 || i == 40) throw std::runtime_error(std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "10");
  }
}
