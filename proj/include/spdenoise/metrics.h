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

#ifndef SPDENOISE_METRICS_H_
#define SPDENOISE_METRICS_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "spdenoise/image.h"

namespace spdenoise {

// Mean squared error. The squared differences are summed exactly in 64-bit
// integers; only the final division is floating point.
absl::StatusOr<double> Mse(const GrayImage& a, const GrayImage& b);

// 10 * log10(255^2 / MSE) in dB. Identical images give +infinity.
absl::StatusOr<double> Psnr(const GrayImage& a, const GrayImage& b);

double PsnrFromMse(double mse);

// "inf" for +infinity, otherwise fixed with four decimals.
std::string FormatPsnr(double psnr_db);

struct DetectionScore {
  double precision = 1.0;
  double recall = 1.0;
};

// A ratio with an empty denominator counts as 1.
absl::StatusOr<DetectionScore> ScoreDetector(const NoiseMask& predicted,
                                             const NoiseMask& truth);

struct MetricsReport {
  std::string filter_name;
  double density = 0.0;
  double mse = 0.0;
  double psnr_db = 0.0;
  std::optional<DetectionScore> detection;
};

// Header line "filter,density,mse,psnr_db,precision,recall" (no newline).
std::string CsvHeader();
// One CSV line, no newline. Missing detection scores leave the last two
// fields empty.
std::string CsvRow(const MetricsReport& report);
// Header plus one line per report, each terminated by '\n'.
std::string ToCsv(const std::vector<MetricsReport>& reports);

}  // namespace spdenoise

#endif  // SPDENOISE_METRICS_H_
