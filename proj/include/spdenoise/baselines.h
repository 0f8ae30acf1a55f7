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

// Reference filters for comparison: the plain 3x3 median and the classical
// two-level adaptive median. Both read the input only and use edge-clamped
// windows.

#ifndef SPDENOISE_BASELINES_H_
#define SPDENOISE_BASELINES_H_

#include "absl/status/status.h"
#include "spdenoise/image.h"

namespace spdenoise {

// Median of the 3x3 window at every pixel, corrupted or not.
GrayImage StandardMedian(const GrayImage& img);

struct AmfConfig {
  int max_window = 39;

  // max_window must be odd and at least 3.
  absl::Status Validate() const;
};

// Adaptive median filter.
//
// Level A grows the window 3, 5, ..., max_window until its median lies
// strictly between the window minimum and maximum; if no size qualifies the
// median of the largest window is output. Level B keeps the center when it
// also lies strictly inside (min, max) and outputs the median otherwise.
GrayImage AdaptiveMedian(const GrayImage& img, const AmfConfig& cfg = {});

}  // namespace spdenoise

#endif  // SPDENOISE_BASELINES_H_
