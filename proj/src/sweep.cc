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

#include "spdenoise/sweep.h"

#include <future>
#include <utility>

#include "absl/strings/str_cat.h"
#include "spdenoise/enhancement.h"
#include "spdenoise/noise_model.h"

namespace spdenoise {
namespace {

struct DensityRows {
  std::vector<MetricsReport> reports;
  double noisy_sigma = 0.0;
};

absl::StatusOr<DensityRows> RunDensity(const GrayImage& clean,
                                       const SweepSpec& spec, size_t index) {
  NoiseSpec noise;
  noise.density = spec.densities[index];
  noise.salt_fraction = spec.salt_fraction;
  noise.seed = spec.seed + index;
  const InjectResult injected = Inject(clean, noise);

  DensityRows rows;
  rows.noisy_sigma = StdDev(injected.image);
  for (FilterKind kind : spec.filters) {
    absl::StatusOr<FilterOutput> out =
        ApplyFilter(kind, injected.image, spec.denoise, spec.amf);
    if (!out.ok()) return out.status();
    absl::StatusOr<double> mse = Mse(clean, out->image);
    if (!mse.ok()) return mse.status();

    MetricsReport report;
    report.filter_name = std::string(FilterName(kind));
    report.density = noise.density;
    report.mse = *mse;
    report.psnr_db = PsnrFromMse(*mse);
    if (out->mask) {
      absl::StatusOr<DetectionScore> score =
          ScoreDetector(*out->mask, injected.mask);
      if (!score.ok()) return score.status();
      report.detection = *score;
    }
    rows.reports.push_back(std::move(report));
  }
  return rows;
}

}  // namespace

std::string_view FilterName(FilterKind kind) {
  switch (kind) {
    case FilterKind::kProposed:
      return "proposed";
    case FilterKind::kSmf:
      return "smf";
    case FilterKind::kAmf:
      return "amf";
    case FilterKind::kNone:
      return "none";
  }
  return "unknown";
}

std::optional<FilterKind> ParseFilter(std::string_view name) {
  if (name == "proposed") return FilterKind::kProposed;
  if (name == "smf") return FilterKind::kSmf;
  if (name == "amf") return FilterKind::kAmf;
  if (name == "none") return FilterKind::kNone;
  return std::nullopt;
}

absl::StatusOr<FilterOutput> ApplyFilter(FilterKind kind,
                                         const GrayImage& noisy,
                                         const DenoiseConfig& denoise,
                                         const AmfConfig& amf) {
  switch (kind) {
    case FilterKind::kProposed: {
      absl::StatusOr<DenoiseResult> r = Denoise(noisy, denoise);
      if (!r.ok()) return r.status();
      return FilterOutput{std::move(r->image), std::move(r->mask)};
    }
    case FilterKind::kSmf:
      return FilterOutput{StandardMedian(noisy), std::nullopt};
    case FilterKind::kAmf:
      if (absl::Status s = amf.Validate(); !s.ok()) return s;
      return FilterOutput{AdaptiveMedian(noisy, amf), std::nullopt};
    case FilterKind::kNone:
      return FilterOutput{noisy, std::nullopt};
  }
  return absl::InvalidArgumentError("unknown filter");
}

std::vector<double> DefaultDensities() {
  std::vector<double> d;
  for (int i = 1; i <= 9; ++i) d.push_back(i / 10.0);
  return d;
}

absl::Status SweepSpec::Validate() const {
  if (densities.empty()) {
    return absl::InvalidArgumentError("sweep needs at least one density");
  }
  for (double p : densities) {
    if (!(p > 0.0 && p <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("sweep density ", p, " outside (0, 1]"));
    }
  }
  if (filters.empty()) {
    return absl::InvalidArgumentError("sweep needs at least one filter");
  }
  if (!(salt_fraction >= 0.0 && salt_fraction <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("salt fraction ", salt_fraction, " outside [0, 1]"));
  }
  if (absl::Status s = denoise.Validate(); !s.ok()) return s;
  return amf.Validate();
}

absl::StatusOr<SweepResult> RunSweep(const GrayImage& clean,
                                     const SweepSpec& spec) {
  if (absl::Status s = spec.Validate(); !s.ok()) return s;
  if (clean.empty()) return absl::InvalidArgumentError("empty input image");

  std::vector<absl::StatusOr<DensityRows>> per_density;
  per_density.reserve(spec.densities.size());
  if (spec.parallel) {
    std::vector<std::future<absl::StatusOr<DensityRows>>> jobs;
    for (size_t i = 0; i < spec.densities.size(); ++i) {
      jobs.push_back(std::async(std::launch::async, RunDensity,
                                std::cref(clean), std::cref(spec), i));
    }
    for (auto& job : jobs) per_density.push_back(job.get());
  } else {
    for (size_t i = 0; i < spec.densities.size(); ++i) {
      per_density.push_back(RunDensity(clean, spec, i));
    }
  }

  SweepResult result;
  for (auto& rows : per_density) {
    if (!rows.ok()) return rows.status();
    result.noisy_sigma.push_back(rows->noisy_sigma);
    for (MetricsReport& r : rows->reports) result.reports.push_back(std::move(r));
  }
  return result;
}

}  // namespace spdenoise
