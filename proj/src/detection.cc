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

#include "spdenoise/detection.h"

#include <cstdlib>

#include "absl/strings/str_cat.h"

namespace spdenoise {

absl::Status DetectorConfig::Validate() const {
  if (!(mag_threshold >= 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("MAG threshold ", mag_threshold, " must be >= 0"));
  }
  return absl::OkStatus();
}

double MeanAbsoluteGradient(const Window3& win) {
  const int center = win.center();
  int sum = 0;
  for (int i = 0; i < 9; ++i) sum += std::abs(win.values[i] - center);
  return sum / 8.0;
}

NoiseMask Classify(const GrayImage& img, const DetectorConfig& cfg) {
  NoiseMask mask(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      // The MAG test only runs for extreme pixels.
      if (!IsExtreme(img(x, y))) continue;
      if (MeanAbsoluteGradient(WindowAt(img, x, y)) > cfg.mag_threshold) {
        mask.Set(x, y, true);
      }
    }
  }
  return mask;
}

}  // namespace spdenoise
