// Copyright 2026 The spdenoise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spdenoise/image.h"

#include <algorithm>

#include <gtest/gtest.h>

#include "test_util.h"

namespace spdenoise {
namespace {

using testing::MakeImage;
using testing::RandomImage;

TEST(GrayImageTest, FromPixelsValidatesShape) {
  EXPECT_TRUE(GrayImage::FromPixels(2, 2, {1, 2, 3, 4}).ok());
  EXPECT_FALSE(GrayImage::FromPixels(2, 2, {1, 2, 3}).ok());
  EXPECT_FALSE(GrayImage::FromPixels(0, 2, {}).ok());
  EXPECT_FALSE(GrayImage::FromPixels(-1, 1, {1}).ok());
}

TEST(GrayImageTest, RowMajorIndexing) {
  const GrayImage img = MakeImage(3, 2, {0, 1, 2, 10, 11, 12});
  EXPECT_EQ(img(0, 0), 0);
  EXPECT_EQ(img(2, 0), 2);
  EXPECT_EQ(img(0, 1), 10);
  EXPECT_EQ(img(2, 1), 12);
}

TEST(WindowAtTest, InteriorOfThreeByThreeIsWholeImage) {
  const GrayImage img = MakeImage(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  const Window3 win = WindowAt(img, 1, 1);
  EXPECT_EQ(win.values, (std::array<uint8_t, 9>{1, 2, 3, 4, 5, 6, 7, 8, 9}));
  EXPECT_EQ(win.center(), 5);
}

TEST(WindowAtTest, CornerOfConstantImage) {
  const GrayImage img(4, 4, 100);
  const Window3 win = WindowAt(img, 0, 0);
  for (uint8_t v : win.values) EXPECT_EQ(v, 100);
}

TEST(WindowAtTest, CornerClampsToEdge) {
  const GrayImage img = MakeImage(2, 2, {1, 2, 3, 4});
  EXPECT_EQ(WindowAt(img, 0, 0).values,
            (std::array<uint8_t, 9>{1, 1, 2, 1, 1, 2, 3, 3, 4}));
  EXPECT_EQ(WindowAt(img, 1, 1).values,
            (std::array<uint8_t, 9>{1, 2, 2, 3, 4, 4, 3, 4, 4}));
}

TEST(WindowAtTest, SinglePixelImage) {
  const GrayImage img(1, 1, 42);
  for (uint8_t v : WindowAt(img, 0, 0).values) EXPECT_EQ(v, 42);
}

TEST(WindowAtTest, MatchesClampedCoordinateOracle) {
  const GrayImage img = RandomImage(7, 5, 3);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const Window3 win = WindowAt(img, x, y);
      int i = 0;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx, ++i) {
          const int cx = std::clamp(x + dx, 0, img.width() - 1);
          const int cy = std::clamp(y + dy, 0, img.height() - 1);
          EXPECT_EQ(win.values[i], img(cx, cy));
        }
      }
    }
  }
}

TEST(MapWindowsTest, CenterIsIdentity) {
  const GrayImage img = RandomImage(9, 6, 1);
  EXPECT_EQ(MapWindows(img, [](const Window3& w) { return w.center(); }), img);
}

TEST(MapWindowsTest, ConstantZero) {
  const GrayImage img = RandomImage(5, 4, 2);
  const GrayImage out = MapWindows(img, [](const Window3&) { return 0; });
  EXPECT_EQ(out, GrayImage(5, 4, 0));
}

TEST(MapWindowsTest, MaxOfWindow) {
  const GrayImage img = MakeImage(2, 2, {0, 255, 0, 0});
  const GrayImage out = MapWindows(img, [](const Window3& w) {
    return *std::max_element(w.values.begin(), w.values.end());
  });
  // Every clamped window of a 2x2 image contains all four pixels.
  EXPECT_EQ(out, MakeImage(2, 2, {255, 255, 255, 255}));
}

TEST(MapWindowsTest, ReadsInputSnapshotRegardlessOfOrder) {
  const GrayImage img = RandomImage(11, 8, 4);
  auto mean = [](const Window3& w) {
    int s = 0;
    for (uint8_t v : w.values) s += v;
    return (s + 4) / 9;
  };
  const GrayImage forward = MapWindows(img, mean);
  // Reverse-order evaluation against the same input.
  GrayImage reverse(img.width(), img.height());
  for (int y = img.height() - 1; y >= 0; --y) {
    for (int x = img.width() - 1; x >= 0; --x) {
      reverse(x, y) = static_cast<uint8_t>(mean(WindowAt(img, x, y)));
    }
  }
  EXPECT_EQ(forward, reverse);
}

TEST(NoiseMaskTest, CountAndImage) {
  NoiseMask mask(3, 2);
  mask.Set(1, 0, true);
  mask.Set(2, 1, true);
  EXPECT_EQ(mask.Count(), 2u);
  EXPECT_TRUE(mask(1, 0));
  EXPECT_FALSE(mask(0, 0));
  EXPECT_EQ(mask.ToImage(), MakeImage(3, 2, {0, 255, 0, 0, 0, 255}));
}

}  // namespace
}  // namespace spdenoise
