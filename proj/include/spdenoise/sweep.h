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

// Density-sweep benchmark: corrupt a clean image at a range of noise
// densities, run each filter and score it against the clean image.

#ifndef SPDENOISE_SWEEP_H_
#define SPDENOISE_SWEEP_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "spdenoise/baselines.h"
#include "spdenoise/image.h"
#include "spdenoise/metrics.h"
#include "spdenoise/pipeline.h"

namespace spdenoise {

enum class FilterKind { kProposed, kSmf, kAmf, kNone };

std::string_view FilterName(FilterKind kind);
std::optional<FilterKind> ParseFilter(std::string_view name);

struct FilterOutput {
  GrayImage image;
  // Only the proposed filter produces a detection mask.
  std::optional<NoiseMask> mask;
};

// kNone returns the input unchanged.
absl::StatusOr<FilterOutput> ApplyFilter(FilterKind kind,
                                         const GrayImage& noisy,
                                         const DenoiseConfig& denoise,
                                         const AmfConfig& amf);

// 0.1, 0.2, ..., 0.9.
std::vector<double> DefaultDensities();

struct SweepSpec {
  std::vector<double> densities = DefaultDensities();
  std::vector<FilterKind> filters = {FilterKind::kProposed, FilterKind::kSmf,
                                     FilterKind::kAmf, FilterKind::kNone};
  // Density i (0-based) is injected with seed + i.
  uint64_t seed = 0;
  double salt_fraction = 0.5;
  DenoiseConfig denoise;
  AmfConfig amf;
  // Densities are processed concurrently; output order never depends on it.
  bool parallel = true;

  absl::Status Validate() const;
};

struct SweepResult {
  // Density-major, filters in the order requested.
  std::vector<MetricsReport> reports;
  // Standard deviation of the corrupted image, one per density.
  std::vector<double> noisy_sigma;
};

absl::StatusOr<SweepResult> RunSweep(const GrayImage& clean,
                                     const SweepSpec& spec);

}  // namespace spdenoise

#endif  // SPDENOISE_SWEEP_H_
