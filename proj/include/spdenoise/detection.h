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

// Impulse detection by mean absolute gradient (MAG).
//
// A pixel is a noise candidate when it holds an extreme value (0 or 255) and
// its 3x3 MAG exceeds the threshold. Extreme pixels inside flat black or
// white regions have a small MAG and are left alone.

#ifndef SPDENOISE_DETECTION_H_
#define SPDENOISE_DETECTION_H_

#include "absl/status/status.h"
#include "spdenoise/image.h"

namespace spdenoise {

struct DetectorConfig {
  double mag_threshold = 20.0;

  absl::Status Validate() const;
};

// Mean of |neighbor - center| over the 8 neighbors.
double MeanAbsoluteGradient(const Window3& win);

// All windows are read from `img` itself.
NoiseMask Classify(const GrayImage& img, const DetectorConfig& cfg);

}  // namespace spdenoise

#endif  // SPDENOISE_DETECTION_H_
