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

#include "spdenoise/reduction.h"

#include <array>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace spdenoise {
namespace {

inline void SortPair(uint8_t& a, uint8_t& b) {
  if (b < a) std::swap(a, b);
}

// Optimal 9-comparator sorting network for five elements.
void Sort5(std::array<uint8_t, 5>& v) {
  SortPair(v[0], v[1]);
  SortPair(v[3], v[4]);
  SortPair(v[2], v[4]);
  SortPair(v[2], v[3]);
  SortPair(v[0], v[3]);
  SortPair(v[0], v[2]);
  SortPair(v[1], v[4]);
  SortPair(v[1], v[3]);
  SortPair(v[1], v[2]);
}

inline uint8_t RoundedMean(uint8_t a, uint8_t b) {
  return static_cast<uint8_t>((a + b + 1) / 2);
}

}  // namespace

std::string_view ScanPolicyName(ScanPolicy policy) {
  switch (policy) {
    case ScanPolicy::kProgressive:
      return "progressive";
    case ScanPolicy::kSnapshot:
      return "snapshot";
  }
  return "unknown";
}

std::optional<ScanPolicy> ParseScanPolicy(std::string_view name) {
  if (name == "progressive") return ScanPolicy::kProgressive;
  if (name == "snapshot") return ScanPolicy::kSnapshot;
  return std::nullopt;
}

uint8_t TwoStageMedian(const Window3& win) {
  const auto& v = win.values;
  std::array<uint8_t, 5> a = {v[4], v[0], v[2], v[6], v[8]};
  Sort5(a);
  std::array<uint8_t, 5> b = {v[1], v[3], v[5], v[7], a[2]};
  Sort5(b);
  if (b[2] == kPepper) return RoundedMean(b[3], b[4]);
  if (b[2] == kSalt) return RoundedMean(b[0], b[1]);
  return b[2];
}

absl::StatusOr<GrayImage> Reduce(const GrayImage& img, const NoiseMask& mask,
                                 ScanPolicy policy) {
  if (!mask.Matches(img)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "mask is ", mask.width(), "x", mask.height(), " but image is ",
        img.width(), "x", img.height()));
  }
  GrayImage out = img;
  // Progressive reads from the buffer being written; snapshot from the input.
  const GrayImage& source = policy == ScanPolicy::kProgressive ? out : img;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (mask(x, y)) out(x, y) = TwoStageMedian(WindowAt(source, x, y));
    }
  }
  return out;
}

}  // namespace spdenoise
