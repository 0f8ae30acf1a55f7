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

// Command-line front end. Subcommands:
//
//   inject  <in.pgm> <out.pgm> --density P --seed S [--mask-out mask.pgm]
//   denoise <in.pgm> <out.pgm> [--filter F] [--reference clean.pgm] ...
//   sweep   <clean.pgm> [--density P,...] [--filter F,...] --csv out.csv
//   psnr    <a.pgm> <b.pgm>

#ifndef SPDENOISE_CLI_H_
#define SPDENOISE_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "spdenoise/baselines.h"
#include "spdenoise/pipeline.h"
#include "spdenoise/sweep.h"

namespace spdenoise::cli {

struct InjectOptions {
  std::string input;
  std::string output;
  std::string mask_out;
  double density = 0.0;
  double salt_fraction = 0.5;
  uint64_t seed = 0;
};

struct DenoiseOptions {
  std::string input;
  std::string output;
  std::string reference;
  FilterKind filter = FilterKind::kProposed;
  DenoiseConfig config;
  AmfConfig amf;
};

struct SweepOptions {
  std::string input;
  // Empty means stdout.
  std::string csv;
  SweepSpec spec;
};

struct PsnrOptions {
  std::string first;
  std::string second;
};

enum class Command { kNone, kInject, kDenoise, kSweep, kPsnr };

struct ParsedArgs {
  Command command = Command::kNone;
  InjectOptions inject;
  DenoiseOptions denoise;
  SweepOptions sweep;
  PsnrOptions psnr;
};

int RunInject(const InjectOptions& opts, std::ostream& out, std::ostream& err);
int RunDenoise(const DenoiseOptions& opts, std::ostream& out,
               std::ostream& err);
int RunSweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);
int RunPsnr(const PsnrOptions& opts, std::ostream& out, std::ostream& err);

// Parses `argv` into `parsed`. Returns -1 on success, otherwise the exit
// code to use (0 for --help).
int ParseArgs(int argc, const char* const* argv, ParsedArgs& parsed,
              std::ostream& out, std::ostream& err);

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err);

}  // namespace spdenoise::cli

#endif  // SPDENOISE_CLI_H_
