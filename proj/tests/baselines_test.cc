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

#include "spdenoise/baselines.h"

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "spdenoise/noise_model.h"
#include "test_util.h"

namespace spdenoise {
namespace {

using testing::RandomImage;
using testing::TexturedImage;

std::vector<int> SortedWindow(const GrayImage& img, int x, int y, int size) {
  std::vector<int> v;
  const int r = size / 2;
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      v.push_back(img(std::clamp(x + dx, 0, img.width() - 1),
                      std::clamp(y + dy, 0, img.height() - 1)));
    }
  }
  std::sort(v.begin(), v.end());
  return v;
}

// Textbook adaptive median written out with fully sorted windows.
GrayImage AmfOracle(const GrayImage& img, int max_window) {
  GrayImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      int size = 3;
      while (true) {
        const std::vector<int> v = SortedWindow(img, x, y, size);
        const int zmin = v.front(), zmax = v.back(), zmed = v[v.size() / 2];
        const int zxy = img(x, y);
        if (zmed - zmin > 0 && zmed - zmax < 0) {
          out(x, y) = (zxy - zmin > 0 && zxy - zmax < 0) ? zxy : zmed;
          break;
        }
        size += 2;
        if (size > max_window) {
          out(x, y) = zmed;
          break;
        }
      }
    }
  }
  return out;
}

TEST(StandardMedianTest, ConstantImageFixed) {
  const GrayImage img(9, 7, 123);
  EXPECT_EQ(StandardMedian(img), img);
}

TEST(StandardMedianTest, RemovesIsolatedSalt) {
  GrayImage img(6, 6, 0);
  img(3, 2) = 255;
  EXPECT_EQ(StandardMedian(img), GrayImage(6, 6, 0));
}

TEST(StandardMedianTest, MatchesSortOracle) {
  for (int trial = 0; trial < 5; ++trial) {
    const GrayImage img = RandomImage(8, 8, trial);
    const GrayImage out = StandardMedian(img);
    for (int y = 0; y < 8; ++y) {
      for (int x = 0; x < 8; ++x) {
        EXPECT_EQ(out(x, y), SortedWindow(img, x, y, 3)[4]);
      }
    }
  }
}

TEST(StandardMedianTest, OutputWithinWindowRange) {
  const GrayImage img = RandomImage(20, 20, 9);
  const GrayImage out = StandardMedian(img);
  for (int y = 0; y < 20; ++y) {
    for (int x = 0; x < 20; ++x) {
      const std::vector<int> v = SortedWindow(img, x, y, 3);
      EXPECT_GE(out(x, y), v.front());
      EXPECT_LE(out(x, y), v.back());
    }
  }
}

TEST(AmfConfigTest, Validation) {
  EXPECT_EQ(AmfConfig{}.max_window, 39);
  EXPECT_TRUE(AmfConfig{3}.Validate().ok());
  EXPECT_FALSE(AmfConfig{1}.Validate().ok());
  EXPECT_FALSE(AmfConfig{4}.Validate().ok());
}

TEST(AdaptiveMedianTest, SinglePepperRestored) {
  GrayImage img(9, 9, 128);
  img(4, 4) = 0;
  EXPECT_EQ(AdaptiveMedian(img), GrayImage(9, 9, 128));
}

TEST(AdaptiveMedianTest, TexturedCleanImagePassesThrough) {
  const GrayImage img = TexturedImage(24, 24, 1);
  const GrayImage out = AdaptiveMedian(img);
  for (int y = 0; y < 24; ++y) {
    for (int x = 0; x < 24; ++x) {
      const std::vector<int> v = SortedWindow(img, x, y, 3);
      const int med = v[4];
      const int c = img(x, y);
      // Level B passthrough at the first window.
      if (v.front() < med && med < v.back() && v.front() < c && c < v.back()) {
        EXPECT_EQ(out(x, y), c);
      }
    }
  }
}

TEST(AdaptiveMedianTest, MatchesOracle) {
  for (int trial = 0; trial < 4; ++trial) {
    const GrayImage noisy =
        Inject(RandomImage(16, 16, trial), {0.3, 0.5, uint64_t(trial)}).image;
    EXPECT_EQ(AdaptiveMedian(noisy), AmfOracle(noisy, 39));
    EXPECT_EQ(AdaptiveMedian(noisy, {5}), AmfOracle(noisy, 5));
  }
  const GrayImage dense =
      Inject(TexturedImage(16, 16, 3), {0.9, 0.5, 3}).image;
  EXPECT_EQ(AdaptiveMedian(dense, {7}), AmfOracle(dense, 7));
}

TEST(AdaptiveMedianTest, ConstantImageFixed) {
  const GrayImage img(7, 5, 0);
  EXPECT_EQ(AdaptiveMedian(img, {5}), img);
}

}  // namespace
}  // namespace spdenoise
