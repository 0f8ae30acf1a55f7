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

#include "spdenoise/noise_model.h"

#include <cassert>

#include "absl/strings/str_cat.h"

namespace spdenoise {

absl::Status NoiseSpec::Validate() const {
  // Written as negated ranges so NaN is rejected too.
  if (!(density >= 0.0 && density <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("noise density ", density, " outside [0, 1]"));
  }
  if (!(salt_fraction >= 0.0 && salt_fraction <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("salt fraction ", salt_fraction, " outside [0, 1]"));
  }
  return absl::OkStatus();
}

InjectResult Inject(const GrayImage& img, const NoiseSpec& spec) {
  assert(spec.Validate().ok());
  InjectResult result{img, NoiseMask(img.width(), img.height())};
  SplitMix64 rng(spec.seed);
  auto px = result.image.mutable_pixels();
  for (size_t i = 0; i < px.size(); ++i) {
    const double u_corrupt = rng.NextUnit();
    const double u_salt = rng.NextUnit();
    if (u_corrupt < spec.density) {
      px[i] = u_salt < spec.salt_fraction ? kSalt : kPepper;
      result.mask.set(i, true);
    }
  }
  return result;
}

}  // namespace spdenoise
