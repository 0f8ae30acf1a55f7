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

// Directional smoothing of a restored image, gated on the spread of the
// noisy input.
//
// With the window labelled x1..x9 in row-major order (x5 the center), the
// four corner triples are
//
//   Y1 = {x1, x2, x4}   Y2 = {x2, x3, x6}
//   Y3 = {x4, x7, x8}   Y4 = {x6, x8, x9}
//
// For a triple (p, q, r) the differences are d1 = |p - q|, d2 = |p - r| and
// d3 = |r - q|. The pair with the smallest difference (first one on ties) is
// averaged, and the output pixel is the mean of the four pair averages.

#ifndef SPDENOISE_ENHANCEMENT_H_
#define SPDENOISE_ENHANCEMENT_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "spdenoise/image.h"

namespace spdenoise {

enum class EnhanceMode {
  kAuto,  // filter iff StdDev(noisy) > sigma_threshold
  kOn,
  kOff,
};

std::string_view EnhanceModeName(EnhanceMode mode);
std::optional<EnhanceMode> ParseEnhanceMode(std::string_view name);

struct EnhanceConfig {
  double sigma_threshold = 75.0;
  EnhanceMode mode = EnhanceMode::kAuto;

  absl::Status Validate() const;
};

// Population standard deviation of all pixel values.
double StdDev(const GrayImage& img);

// The pair averages are kept exact and the final mean is rounded half-up
// once, so the result always lies within [min, max] of the window.
uint8_t DirectionalPixel(const Window3& win);

// True when `cfg` asks for the directional pass given the noisy input.
bool ShouldEnhance(const GrayImage& noisy, const EnhanceConfig& cfg);

// Applies DirectionalPixel to every pixel of `restored` (reading `restored`
// only) when the gate is open; otherwise returns `restored` unchanged.
absl::StatusOr<GrayImage> Enhance(const GrayImage& restored,
                                  const GrayImage& noisy,
                                  const EnhanceConfig& cfg);

}  // namespace spdenoise

#endif  // SPDENOISE_ENHANCEMENT_H_
