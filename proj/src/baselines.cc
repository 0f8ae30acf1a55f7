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

#include "spdenoise/baselines.h"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <vector>

#include "absl/strings/str_cat.h"

namespace spdenoise {
namespace {

struct OrderStats {
  uint8_t min;
  uint8_t median;
  uint8_t max;
};

// Order statistics of the clamped size x size window centered on (x, y).
// `buf` is scratch space reused across calls.
OrderStats WindowStats(const GrayImage& img, int x, int y, int size,
                       std::vector<uint8_t>& buf) {
  const int r = size / 2;
  buf.clear();
  for (int dy = -r; dy <= r; ++dy) {
    const int yy = std::clamp(y + dy, 0, img.height() - 1);
    for (int dx = -r; dx <= r; ++dx) {
      buf.push_back(img(std::clamp(x + dx, 0, img.width() - 1), yy));
    }
  }
  const auto mid = buf.begin() + buf.size() / 2;
  std::nth_element(buf.begin(), mid, buf.end());
  const uint8_t median = *mid;
  const uint8_t lo = *std::min_element(buf.begin(), mid + 1);
  const uint8_t hi = *std::max_element(mid, buf.end());
  return {lo, median, hi};
}

}  // namespace

GrayImage StandardMedian(const GrayImage& img) {
  return MapWindows(img, [](const Window3& win) {
    std::array<uint8_t, 9> v = win.values;
    std::nth_element(v.begin(), v.begin() + 4, v.end());
    return v[4];
  });
}

absl::Status AmfConfig::Validate() const {
  if (max_window < 3 || max_window % 2 == 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "AMF max window ", max_window, " must be odd and at least 3"));
  }
  return absl::OkStatus();
}

GrayImage AdaptiveMedian(const GrayImage& img, const AmfConfig& cfg) {
  assert(cfg.Validate().ok());
  GrayImage out(img.width(), img.height());
  std::vector<uint8_t> buf;
  buf.reserve(static_cast<size_t>(cfg.max_window) * cfg.max_window);
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const uint8_t center = img(x, y);
      uint8_t value = center;
      for (int size = 3; size <= cfg.max_window; size += 2) {
        const OrderStats s = WindowStats(img, x, y, size, buf);
        if (s.min < s.median && s.median < s.max) {
          value = (s.min < center && center < s.max) ? center : s.median;
          break;
        }
        if (size + 2 > cfg.max_window) value = s.median;
      }
      out(x, y) = value;
    }
  }
  return out;
}

}  // namespace spdenoise
