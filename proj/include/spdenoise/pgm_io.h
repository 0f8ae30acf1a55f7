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

// Binary PGM (P5, maxval 255) reading and writing.
//
// Reading accepts any whitespace between header tokens and '#' comments
// running to end of line. Exactly one whitespace byte separates maxval from
// the raster. Writing always emits the canonical header "P5\n<w> <h>\n255\n".

#ifndef SPDENOISE_PGM_IO_H_
#define SPDENOISE_PGM_IO_H_

#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "spdenoise/image.h"

namespace spdenoise {

absl::StatusOr<GrayImage> ReadPgm(std::string_view bytes);
std::string WritePgm(const GrayImage& img);

absl::StatusOr<GrayImage> ReadPgmFile(const std::string& path);
absl::Status WritePgmFile(const std::string& path, const GrayImage& img);

}  // namespace spdenoise

#endif  // SPDENOISE_PGM_IO_H_
