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

#include "spdenoise/image.h"

#include <algorithm>
#include <cassert>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace spdenoise {

GrayImage::GrayImage(int width, int height, uint8_t fill)
    : width_(width),
      height_(height),
      pixels_(static_cast<size_t>(width) * height, fill) {
  assert(width > 0 && height > 0);
}

absl::StatusOr<GrayImage> GrayImage::FromPixels(int width, int height,
                                                std::vector<uint8_t> pixels) {
  if (width <= 0 || height <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("nonpositive image dimensions ", width, "x", height));
  }
  if (pixels.size() != static_cast<size_t>(width) * height) {
    return absl::InvalidArgumentError(
        absl::StrCat("pixel count ", pixels.size(), " does not match ", width,
                     "x", height));
  }
  GrayImage img;
  img.width_ = width;
  img.height_ = height;
  img.pixels_ = std::move(pixels);
  return img;
}

NoiseMask::NoiseMask(int width, int height, bool fill)
    : width_(width),
      height_(height),
      flags_(static_cast<size_t>(width) * height, fill ? 1 : 0) {}

size_t NoiseMask::Count() const {
  return static_cast<size_t>(std::count(flags_.begin(), flags_.end(), 1));
}

GrayImage NoiseMask::ToImage() const {
  GrayImage img(width_, height_);
  auto px = img.mutable_pixels();
  for (size_t i = 0; i < flags_.size(); ++i) px[i] = flags_[i] ? kSalt : 0;
  return img;
}

Window3 WindowAt(const GrayImage& img, int x, int y) {
  assert(x >= 0 && x < img.width() && y >= 0 && y < img.height());
  const int x0 = std::max(x - 1, 0);
  const int x2 = std::min(x + 1, img.width() - 1);
  const int y0 = std::max(y - 1, 0);
  const int y2 = std::min(y + 1, img.height() - 1);
  const int xs[3] = {x0, x, x2};
  const int ys[3] = {y0, y, y2};
  Window3 win;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) win.values[r * 3 + c] = img(xs[c], ys[r]);
  }
  return win;
}

}  // namespace spdenoise
