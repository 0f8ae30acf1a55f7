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

// The full three-phase salt-and-pepper denoiser: MAG detection, two-stage
// median replacement of the detected pixels, then gated directional
// smoothing.

#ifndef SPDENOISE_PIPELINE_H_
#define SPDENOISE_PIPELINE_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "spdenoise/detection.h"
#include "spdenoise/enhancement.h"
#include "spdenoise/image.h"
#include "spdenoise/reduction.h"

namespace spdenoise {

struct DenoiseConfig {
  DetectorConfig detector;
  ScanPolicy scan = ScanPolicy::kProgressive;
  EnhanceConfig enhance;

  absl::Status Validate() const;
};

struct DenoiseResult {
  GrayImage image;
  // Detector output, returned so callers can score it.
  NoiseMask mask;
};

absl::StatusOr<DenoiseResult> Denoise(const GrayImage& noisy,
                                      const DenoiseConfig& cfg = {});

}  // namespace spdenoise

#endif  // SPDENOISE_PIPELINE_H_
