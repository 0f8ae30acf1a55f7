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

#include <utility>

namespace spdenoise {

absl::Status DenoiseConfig::Validate() const {
  if (absl::Status s = detector.Validate(); !s.ok()) return s;
  return enhance.Validate();
}

absl::StatusOr<DenoiseResult> Denoise(const GrayImage& noisy,
                                      const DenoiseConfig& cfg) {
  if (absl::Status s = cfg.Validate(); !s.ok()) return s;
  NoiseMask mask = Classify(noisy, cfg.detector);
  absl::StatusOr<GrayImage> restored = Reduce(noisy, mask, cfg.scan);
  if (!restored.ok()) return restored.status();
  absl::StatusOr<GrayImage> enhanced = Enhance(*restored, noisy, cfg.enhance);
  if (!enhanced.ok()) return enhanced.status();
  return DenoiseResult{*std::move(enhanced), std::move(mask)};
}

}  // namespace spdenoise
