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

#include "spdenoise/pgm_io.h"

#include <cstdint>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <vector>

#include "absl/strings/str_cat.h"

namespace spdenoise {
namespace {

// Sanity cap on the raster size so a corrupt header cannot request an
// enormous allocation.
constexpr int64_t kMaxPixels = int64_t{1} << 30;

bool IsPgmSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

class HeaderScanner {
 public:
  explicit HeaderScanner(std::string_view bytes) : bytes_(bytes) {}

  // Skips whitespace and comments, then reads a run of non-space bytes.
  std::string_view NextToken() {
    SkipSpaceAndComments();
    const size_t start = pos_;
    while (pos_ < bytes_.size() && !IsPgmSpace(bytes_[pos_]) &&
           bytes_[pos_] != '#') {
      ++pos_;
    }
    return bytes_.substr(start, pos_ - start);
  }

  // Parses a decimal integer token; nullopt if the token is not one.
  std::optional<int64_t> NextInteger() {
    std::string_view tok = NextToken();
    if (tok.empty()) return std::nullopt;
    int64_t value = 0;
    bool negative = false;
    size_t i = 0;
    if (tok[0] == '-' || tok[0] == '+') {
      negative = tok[0] == '-';
      i = 1;
      if (tok.size() == 1) return std::nullopt;
    }
    for (; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') return std::nullopt;
      if (value > (std::numeric_limits<int64_t>::max() - 9) / 10) {
        return std::nullopt;
      }
      value = value * 10 + (tok[i] - '0');
    }
    return negative ? -value : value;
  }

  // Consumes the single whitespace byte that ends the header.
  bool ConsumeRasterSeparator() {
    if (pos_ >= bytes_.size() || !IsPgmSpace(bytes_[pos_])) return false;
    ++pos_;
    return true;
  }

  size_t position() const { return pos_; }

 private:
  void SkipSpaceAndComments() {
    while (pos_ < bytes_.size()) {
      if (IsPgmSpace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::string_view bytes_;
  size_t pos_ = 0;
};

}  // namespace

absl::StatusOr<GrayImage> ReadPgm(std::string_view bytes) {
  HeaderScanner scan(bytes);
  const std::string_view magic = scan.NextToken();
  if (magic == "P2") {
    return absl::InvalidArgumentError(
        "ASCII PGM (P2) is not supported; convert to binary P5");
  }
  if (magic != "P5") {
    return absl::InvalidArgumentError(
        absl::StrCat("bad magic number '", std::string(magic.substr(0, 16)),
                     "'; expected binary PGM 'P5'"));
  }

  const std::optional<int64_t> width = scan.NextInteger();
  const std::optional<int64_t> height = scan.NextInteger();
  if (!width || !height) {
    return absl::InvalidArgumentError("malformed PGM dimensions");
  }
  if (*width <= 0 || *height <= 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "nonpositive PGM dimensions ", *width, "x", *height));
  }
  if (*width > kMaxPixels || *height > kMaxPixels ||
      *width * *height > kMaxPixels) {
    return absl::InvalidArgumentError(absl::StrCat(
        "PGM dimensions ", *width, "x", *height, " exceed the size limit"));
  }

  const std::optional<int64_t> maxval = scan.NextInteger();
  if (!maxval) return absl::InvalidArgumentError("malformed PGM maxval");
  if (*maxval != 255) {
    return absl::InvalidArgumentError(
        absl::StrCat("unsupported maxval ", *maxval, "; only 255 is accepted"));
  }
  if (!scan.ConsumeRasterSeparator()) {
    return absl::InvalidArgumentError(
        "missing whitespace between PGM header and raster");
  }

  const size_t count = static_cast<size_t>(*width * *height);
  const size_t available = bytes.size() - scan.position();
  if (available < count) {
    return absl::DataLossError(absl::StrCat("truncated PGM raster: expected ",
                                            count, " bytes, got ", available));
  }
  const auto* raster =
      reinterpret_cast<const uint8_t*>(bytes.data() + scan.position());
  return GrayImage::FromPixels(static_cast<int>(*width),
                               static_cast<int>(*height),
                               std::vector<uint8_t>(raster, raster + count));
}

std::string WritePgm(const GrayImage& img) {
  std::string out =
      absl::StrCat("P5\n", img.width(), " ", img.height(), "\n255\n");
  const auto px = img.pixels();
  out.append(reinterpret_cast<const char*>(px.data()), px.size());
  return out;
}

absl::StatusOr<GrayImage> ReadPgmFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (in.bad()) return absl::DataLossError(absl::StrCat("error reading ", path));
  absl::StatusOr<GrayImage> img = ReadPgm(bytes);
  if (!img.ok()) {
    return absl::Status(img.status().code(),
                        absl::StrCat(path, ": ", img.status().message()));
  }
  return img;
}

absl::Status WritePgmFile(const std::string& path, const GrayImage& img) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::PermissionDeniedError(absl::StrCat("cannot open ", path));
  const std::string bytes = WritePgm(img);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  out.close();
  if (!out) return absl::DataLossError(absl::StrCat("error writing ", path));
  return absl::OkStatus();
}

}  // namespace spdenoise
