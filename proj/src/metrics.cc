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

#include "spdenoise/metrics.h"

#include <cmath>
#include <cstdint>
#include <limits>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace spdenoise {

absl::StatusOr<double> Mse(const GrayImage& a, const GrayImage& b) {
  if (!a.SameShape(b)) {
    return absl::InvalidArgumentError(
        absl::StrCat("image sizes differ: ", a.width(), "x", a.height(),
                     " vs ", b.width(), "x", b.height()));
  }
  if (a.empty()) return absl::InvalidArgumentError("empty images");
  const auto pa = a.pixels();
  const auto pb = b.pixels();
  uint64_t sum = 0;
  for (size_t i = 0; i < pa.size(); ++i) {
    const int64_t d = int64_t{pa[i]} - int64_t{pb[i]};
    sum += static_cast<uint64_t>(d * d);
  }
  return static_cast<double>(sum) / static_cast<double>(pa.size());
}

double PsnrFromMse(double mse) {
  if (mse <= 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

absl::StatusOr<double> Psnr(const GrayImage& a, const GrayImage& b) {
  absl::StatusOr<double> mse = Mse(a, b);
  if (!mse.ok()) return mse.status();
  return PsnrFromMse(*mse);
}

std::string FormatPsnr(double psnr_db) {
  if (std::isinf(psnr_db) && psnr_db > 0) return "inf";
  return absl::StrFormat("%.4f", psnr_db);
}

absl::StatusOr<DetectionScore> ScoreDetector(const NoiseMask& predicted,
                                             const NoiseMask& truth) {
  if (!predicted.SameShape(truth)) {
    return absl::InvalidArgumentError(
        absl::StrCat("mask sizes differ: ", predicted.width(), "x",
                     predicted.height(), " vs ", truth.width(), "x",
                     truth.height()));
  }
  size_t tp = 0, fp = 0, fn = 0;
  for (size_t i = 0; i < truth.size(); ++i) {
    const bool p = predicted.at(i);
    const bool t = truth.at(i);
    tp += p && t;
    fp += p && !t;
    fn += !p && t;
  }
  DetectionScore score;
  if (tp + fp > 0) score.precision = static_cast<double>(tp) / (tp + fp);
  if (tp + fn > 0) score.recall = static_cast<double>(tp) / (tp + fn);
  return score;
}

std::string CsvHeader() { return "filter,density,mse,psnr_db,precision,recall"; }

std::string CsvRow(const MetricsReport& report) {
  std::string row =
      absl::StrFormat("%s,%.2f,%.6f,%s,", report.filter_name, report.density,
                      report.mse, FormatPsnr(report.psnr_db));
  if (report.detection) {
    absl::StrAppendFormat(&row, "%.6f,%.6f", report.detection->precision,
                          report.detection->recall);
  } else {
    row += ",";
  }
  return row;
}

std::string ToCsv(const std::vector<MetricsReport>& reports) {
  std::string out = CsvHeader();
  out += '\n';
  for (const MetricsReport& r : reports) {
    out += CsvRow(r);
    out += '\n';
  }
  return out;
}

}  // namespace spdenoise
