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

#include "spdenoise/pipeline.h"

#include <gtest/gtest.h>

#include "spdenoise/noise_model.h"
#include "test_util.h"

namespace spdenoise {
namespace {

using testing::MakeImage;
using testing::RandomImage;
using testing::TexturedImage;

TEST(DenoiseTest, CleanTexturedImageUnchanged) {
  const GrayImage img = TexturedImage(32, 32, 1);
  ASSERT_LE(StdDev(img), 75.0);
  absl::StatusOr<DenoiseResult> r = Denoise(img);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->mask.Count(), 0u);
  EXPECT_EQ(r->image, img);
}

TEST(DenoiseTest, SingleImpulseGateClosed) {
  const GrayImage img = MakeImage(3, 3, {10, 20, 30, 40, 0, 60, 70, 80, 90});
  absl::StatusOr<DenoiseResult> r = Denoise(img);
  ASSERT_TRUE(r.ok());
  // MAG 50 > 20, sigma ~ 28.7 keeps the gate closed.
  EXPECT_TRUE(r->mask(1, 1));
  EXPECT_EQ(r->mask.Count(), 1u);
  EXPECT_EQ(r->image, MakeImage(3, 3, {10, 20, 30, 40, 40, 60, 70, 80, 90}));
}

TEST(DenoiseTest, EqualsManualComposition) {
  for (int trial = 0; trial < 12; ++trial) {
    const GrayImage noisy =
        Inject(RandomImage(40, 30, trial), {0.08 * trial, 0.5, uint64_t(trial)})
            .image;
    DenoiseConfig cfg;
    cfg.detector.mag_threshold = 10.0 * (trial % 5);
    cfg.scan = trial % 2 ? ScanPolicy::kSnapshot : ScanPolicy::kProgressive;
    cfg.enhance.mode = static_cast<EnhanceMode>(trial % 3);
    cfg.enhance.sigma_threshold = 60.0 + trial;

    const NoiseMask mask = Classify(noisy, cfg.detector);
    const GrayImage restored = *Reduce(noisy, mask, cfg.scan);
    const GrayImage expected = *Enhance(restored, noisy, cfg.enhance);

    absl::StatusOr<DenoiseResult> r = Denoise(noisy, cfg);
    ASSERT_TRUE(r.ok());
    EXPECT_EQ(r->mask, mask);
    EXPECT_EQ(r->image, expected);
  }
}

TEST(DenoiseTest, DetailPreservationWithEnhanceOff) {
  for (int trial = 0; trial < 20; ++trial) {
    const GrayImage noisy =
        Inject(RandomImage(32, 32, trial), {0.05 * trial, 0.5, uint64_t(trial)})
            .image;
    DenoiseConfig cfg;
    cfg.enhance.mode = EnhanceMode::kOff;
    const DenoiseResult r = *Denoise(noisy, cfg);
    for (size_t i = 0; i < noisy.size(); ++i) {
      if (!r.mask.at(i)) {
        EXPECT_EQ(r.image.pixels()[i], noisy.pixels()[i]);
      }
    }
  }
}

TEST(DenoiseTest, ConstantImageFixedPoint) {
  for (int c : {0, 90, 255}) {
    const GrayImage img(10, 10, static_cast<uint8_t>(c));
    EXPECT_EQ(Denoise(img)->image, img);
  }
}

TEST(DenoiseTest, InvalidConfigRejected) {
  DenoiseConfig cfg;
  cfg.detector.mag_threshold = -1;
  EXPECT_FALSE(Denoise(GrayImage(4, 4), cfg).ok());
  cfg = {};
  cfg.enhance.sigma_threshold = -1;
  EXPECT_FALSE(Denoise(GrayImage(4, 4), cfg).ok());
}

}  // namespace
}  // namespace spdenoise
