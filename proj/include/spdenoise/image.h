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

#ifndef SPDENOISE_IMAGE_H_
#define SPDENOISE_IMAGE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace spdenoise {

constexpr uint8_t kPepper = 0;
constexpr uint8_t kSalt = 255;

inline constexpr bool IsExtreme(uint8_t v) { return v == kPepper || v == kSalt; }

// 8-bit grayscale image, row-major. Coordinates are (x = column, y = row).
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, uint8_t fill = 0);

  // Fails if the dimensions are nonpositive or do not match the pixel count.
  static absl::StatusOr<GrayImage> FromPixels(int width, int height,
                                              std::vector<uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return pixels_.size(); }
  bool empty() const { return pixels_.empty(); }

  uint8_t operator()(int x, int y) const {
    return pixels_[static_cast<size_t>(y) * width_ + x];
  }
  uint8_t& operator()(int x, int y) {
    return pixels_[static_cast<size_t>(y) * width_ + x];
  }

  std::span<const uint8_t> pixels() const { return pixels_; }
  std::span<uint8_t> mutable_pixels() { return pixels_; }

  bool SameShape(const GrayImage& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  bool operator==(const GrayImage&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<uint8_t> pixels_;
};

// Per-pixel noise-candidate flags with the same geometry as an image.
class NoiseMask {
 public:
  NoiseMask() = default;
  NoiseMask(int width, int height, bool fill = false);

  int width() const { return width_; }
  int height() const { return height_; }
  size_t size() const { return flags_.size(); }

  bool operator()(int x, int y) const {
    return flags_[static_cast<size_t>(y) * width_ + x] != 0;
  }
  void Set(int x, int y, bool value) {
    flags_[static_cast<size_t>(y) * width_ + x] = value ? 1 : 0;
  }
  bool at(size_t index) const { return flags_[index] != 0; }
  void set(size_t index, bool value) { flags_[index] = value ? 1 : 0; }

  size_t Count() const;

  bool Matches(const GrayImage& img) const {
    return width_ == img.width() && height_ == img.height();
  }
  bool SameShape(const NoiseMask& other) const {
    return width_ == other.width_ && height_ == other.height_;
  }

  // 255 where flagged, 0 elsewhere.
  GrayImage ToImage() const;

  bool operator==(const NoiseMask&) const = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<uint8_t> flags_;
};

// 3x3 neighborhood in row-major order:
//
//   0 1 2
//   3 4 5
//   6 7 8
//
// Index 4 is the center pixel.
struct Window3 {
  std::array<uint8_t, 9> values{};

  uint8_t center() const { return values[4]; }
  bool operator==(const Window3&) const = default;
};

inline constexpr std::array<int, 4> kDiagonalIndices = {0, 2, 6, 8};
inline constexpr std::array<int, 4> kCrossIndices = {1, 3, 5, 7};

// Neighborhood of (x, y) with out-of-range coordinates clamped to the
// nearest edge pixel. (x, y) must lie inside the image.
Window3 WindowAt(const GrayImage& img, int x, int y);

// Applies `fn(const Window3&) -> uint8_t` at every pixel. Windows always
// read `img`, never the output being built.
template <typename Fn>
GrayImage MapWindows(const GrayImage& img, Fn&& fn) {
  GrayImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      out(x, y) = static_cast<uint8_t>(fn(WindowAt(img, x, y)));
    }
  }
  return out;
}

}  // namespace spdenoise

#endif  // SPDENOISE_IMAGE_H_
