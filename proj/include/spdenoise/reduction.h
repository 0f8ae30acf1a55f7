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

// Replacement of detected impulses by a two-stage sorted median.
//
// Stage one takes the median a3 of the center and its four diagonal
// neighbors. Stage two sorts the four cross neighbors together with a3 into
// b1 <= ... <= b5. The output is b3 unless b3 is itself extreme: when b3 is 0
// the mean of b4 and b5 is used, when b3 is 255 the mean of b1 and b2.

#ifndef SPDENOISE_REDUCTION_H_
#define SPDENOISE_REDUCTION_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "absl/status/statusor.h"
#include "spdenoise/image.h"

namespace spdenoise {

enum class ScanPolicy {
  // Raster order; windows see values already restored earlier in the scan.
  kProgressive,
  // Windows read the noisy input only.
  kSnapshot,
};

std::string_view ScanPolicyName(ScanPolicy policy);
std::optional<ScanPolicy> ParseScanPolicy(std::string_view name);

uint8_t TwoStageMedian(const Window3& win);

// Unflagged pixels are copied verbatim. Fails if the mask geometry differs
// from the image.
absl::StatusOr<GrayImage> Reduce(const GrayImage& img, const NoiseMask& mask,
                                 ScanPolicy policy = ScanPolicy::kProgressive);

}  // namespace spdenoise

#endif  // SPDENOISE_REDUCTION_H_
