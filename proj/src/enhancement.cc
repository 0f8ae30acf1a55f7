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

#include "spdenoise/enhancement.h"

#include <array>
#include <cmath>
#include <cstdlib>

#include "absl/strings/str_cat.h"

namespace spdenoise {
namespace {

// Corner triples (p, q, r) as window indices.
constexpr std::array<std::array<int, 3>, 4> kCornerGroups = {{
    {0, 1, 3},
    {1, 2, 5},
    {3, 6, 7},
    {5, 7, 8},
}};

// Sum of the closest pair in (p, q, r), i.e. twice its average.
int ClosestPairSum(int p, int q, int r) {
  const int d1 = std::abs(p - q);
  const int d2 = std::abs(p - r);
  const int d3 = std::abs(r - q);
  if (d1 <= d2 && d1 <= d3) return p + q;
  if (d2 <= d3) return p + r;
  return r + q;
}

}  // namespace

std::string_view EnhanceModeName(EnhanceMode mode) {
  switch (mode) {
    case EnhanceMode::kAuto:
      return "auto";
    case EnhanceMode::kOn:
      return "on";
    case EnhanceMode::kOff:
      return "off";
  }
  return "unknown";
}

std::optional<EnhanceMode> ParseEnhanceMode(std::string_view name) {
  if (name == "auto") return EnhanceMode::kAuto;
  if (name == "on") return EnhanceMode::kOn;
  if (name == "off") return EnhanceMode::kOff;
  return std::nullopt;
}

absl::Status EnhanceConfig::Validate() const {
  if (!(sigma_threshold >= 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("sigma threshold ", sigma_threshold, " must be >= 0"));
  }
  return absl::OkStatus();
}

double StdDev(const GrayImage& img) {
  const auto px = img.pixels();
  if (px.empty()) return 0.0;
  double sum = 0.0;
  for (uint8_t v : px) sum += v;
  const double mean = sum / static_cast<double>(px.size());
  double sq = 0.0;
  for (uint8_t v : px) {
    const double d = v - mean;
    sq += d * d;
  }
  return std::sqrt(sq / static_cast<double>(px.size()));
}

uint8_t DirectionalPixel(const Window3& win) {
  const auto& v = win.values;
  int total = 0;
  for (const auto& g : kCornerGroups) {
    total += ClosestPairSum(v[g[0]], v[g[1]], v[g[2]]);
  }
  // total / 8 rounded half-up.
  return static_cast<uint8_t>((total + 4) / 8);
}

bool ShouldEnhance(const GrayImage& noisy, const EnhanceConfig& cfg) {
  switch (cfg.mode) {
    case EnhanceMode::kOn:
      return true;
    case EnhanceMode::kOff:
      return false;
    case EnhanceMode::kAuto:
      return StdDev(noisy) > cfg.sigma_threshold;
  }
  return false;
}

absl::StatusOr<GrayImage> Enhance(const GrayImage& restored,
                                  const GrayImage& noisy,
                                  const EnhanceConfig& cfg) {
  if (!restored.SameShape(noisy)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "restored image is ", restored.width(), "x", restored.height(),
        " but noisy image is ", noisy.width(), "x", noisy.height()));
  }
  if (!ShouldEnhance(noisy, cfg)) return restored;
  return MapWindows(restored, DirectionalPixel);
}

}  // namespace spdenoise
