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

// Seeded salt-and-pepper noise injection.
//
// The random stream is SplitMix64:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// with the initial state equal to the seed. A uniform double in [0, 1) is
// (next() >> 11) * 2^-53.
//
// Pixels are visited in raster order and every pixel consumes exactly two
// uniforms, u_corrupt then u_salt, whether or not it is corrupted. The pixel
// is replaced when u_corrupt < density, with 255 if u_salt < salt_fraction
// and 0 otherwise.

#ifndef SPDENOISE_NOISE_MODEL_H_
#define SPDENOISE_NOISE_MODEL_H_

#include <cstdint>

#include "absl/status/status.h"
#include "spdenoise/image.h"

namespace spdenoise {

class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t Next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits of resolution.
  double NextUnit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

struct NoiseSpec {
  double density = 0.0;
  double salt_fraction = 0.5;
  uint64_t seed = 0;

  absl::Status Validate() const;
};

struct InjectResult {
  GrayImage image;
  // True exactly where the sampler overwrote the pixel.
  NoiseMask mask;
};

// `spec` must satisfy Validate().
InjectResult Inject(const GrayImage& img, const NoiseSpec& spec);

}  // namespace spdenoise

#endif  // SPDENOISE_NOISE_MODEL_H_
