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

#include "spdenoise/cli.h"

#include <fstream>
#include <map>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "absl/strings/str_format.h"
#include "spdenoise/enhancement.h"
#include "spdenoise/metrics.h"
#include "spdenoise/noise_model.h"
#include "spdenoise/pgm_io.h"

namespace spdenoise::cli {
namespace {

const std::map<std::string, ScanPolicy>& ScanNames() {
  static const auto* names = new std::map<std::string, ScanPolicy>{
      {"progressive", ScanPolicy::kProgressive},
      {"snapshot", ScanPolicy::kSnapshot}};
  return *names;
}

const std::map<std::string, EnhanceMode>& EnhanceNames() {
  static const auto* names = new std::map<std::string, EnhanceMode>{
      {"auto", EnhanceMode::kAuto},
      {"on", EnhanceMode::kOn},
      {"off", EnhanceMode::kOff}};
  return *names;
}

const std::map<std::string, FilterKind>& FilterNames() {
  static const auto* names = new std::map<std::string, FilterKind>{
      {"proposed", FilterKind::kProposed},
      {"smf", FilterKind::kSmf},
      {"amf", FilterKind::kAmf},
      {"none", FilterKind::kNone}};
  return *names;
}

// Flags shared by `denoise` and `sweep`.
void AddFilterFlags(CLI::App* cmd, DenoiseConfig& config, AmfConfig& amf) {
  cmd->add_option("--mag-threshold", config.detector.mag_threshold,
                  "MAG threshold for impulse detection")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--sigma-threshold", config.enhance.sigma_threshold,
                  "Noisy-image std dev above which directional filtering runs")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--enhance", config.enhance.mode,
                  "Directional filtering: auto, on or off")
      ->transform(CLI::CheckedTransformer(EnhanceNames()))
      ->option_text("MODE [auto]");
  cmd->add_option("--scan", config.scan,
                  "Reduction scan order: progressive or snapshot")
      ->transform(CLI::CheckedTransformer(ScanNames()))
      ->option_text("ORDER [progressive]");
  cmd->add_option("--max-window", amf.max_window,
                  "Largest adaptive median window (odd, >= 3)")
      ->check(CLI::Range(3, 1 << 15))
      ->capture_default_str();
}

void PrintError(std::ostream& err, const absl::Status& status) {
  err << "error: " << status.message() << "\n";
}

absl::Status WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return absl::PermissionDeniedError("cannot open " + path);
  f << text;
  f.close();
  if (!f) return absl::DataLossError("error writing " + path);
  return absl::OkStatus();
}

}  // namespace

int RunInject(const InjectOptions& opts, std::ostream& out, std::ostream& err) {
  NoiseSpec spec;
  spec.density = opts.density;
  spec.salt_fraction = opts.salt_fraction;
  spec.seed = opts.seed;
  if (absl::Status s = spec.Validate(); !s.ok()) {
    PrintError(err, s);
    return 1;
  }
  absl::StatusOr<GrayImage> clean = ReadPgmFile(opts.input);
  if (!clean.ok()) {
    PrintError(err, clean.status());
    return 1;
  }
  const InjectResult noisy = Inject(*clean, spec);
  if (absl::Status s = WritePgmFile(opts.output, noisy.image); !s.ok()) {
    PrintError(err, s);
    return 1;
  }
  if (!opts.mask_out.empty()) {
    if (absl::Status s = WritePgmFile(opts.mask_out, noisy.mask.ToImage());
        !s.ok()) {
      PrintError(err, s);
      return 1;
    }
  }
  const size_t corrupted = noisy.mask.Count();
  out << absl::StrFormat("corrupted %d of %d pixels\n", corrupted,
                         noisy.mask.size());
  out << absl::StrFormat("corrupted_fraction %.6f\n",
                         static_cast<double>(corrupted) / noisy.mask.size());
  return 0;
}

int RunDenoise(const DenoiseOptions& opts, std::ostream& out,
               std::ostream& err) {
  absl::StatusOr<GrayImage> noisy = ReadPgmFile(opts.input);
  if (!noisy.ok()) {
    PrintError(err, noisy.status());
    return 1;
  }
  std::optional<GrayImage> reference;
  if (!opts.reference.empty()) {
    absl::StatusOr<GrayImage> ref = ReadPgmFile(opts.reference);
    if (!ref.ok()) {
      PrintError(err, ref.status());
      return 1;
    }
    if (!ref->SameShape(*noisy)) {
      err << absl::StrFormat(
          "error: reference is %dx%d but input is %dx%d\n", ref->width(),
          ref->height(), noisy->width(), noisy->height());
      return 1;
    }
    reference = *std::move(ref);
  }

  absl::StatusOr<FilterOutput> result =
      ApplyFilter(opts.filter, *noisy, opts.config, opts.amf);
  if (!result.ok()) {
    PrintError(err, result.status());
    return 1;
  }
  if (absl::Status s = WritePgmFile(opts.output, result->image); !s.ok()) {
    PrintError(err, s);
    return 1;
  }

  out << "filter " << FilterName(opts.filter) << "\n";
  if (result->mask) {
    out << "flagged " << result->mask->Count() << "\n";
    out << absl::StrFormat("noisy_sigma %.4f\n", StdDev(*noisy));
  }
  if (reference) {
    const double mse = *Mse(*reference, result->image);
    out << absl::StrFormat("mse %.6f\n", mse);
    out << "psnr_db " << FormatPsnr(PsnrFromMse(mse)) << "\n";
  }
  return 0;
}

int RunSweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
  absl::StatusOr<GrayImage> clean = ReadPgmFile(opts.input);
  if (!clean.ok()) {
    PrintError(err, clean.status());
    return 1;
  }
  absl::StatusOr<SweepResult> result = RunSweep(*clean, opts.spec);
  if (!result.ok()) {
    PrintError(err, result.status());
    return 1;
  }
  const std::string csv = ToCsv(result->reports);
  if (opts.csv.empty()) {
    out << csv;
  } else {
    if (absl::Status s = WriteTextFile(opts.csv, csv); !s.ok()) {
      PrintError(err, s);
      return 1;
    }
    for (size_t i = 0; i < result->noisy_sigma.size(); ++i) {
      out << absl::StrFormat("density %.2f noisy_sigma %.4f\n",
                             opts.spec.densities[i], result->noisy_sigma[i]);
    }
    out << "wrote " << result->reports.size() << " rows to " << opts.csv
        << "\n";
  }
  return 0;
}

int RunPsnr(const PsnrOptions& opts, std::ostream& out, std::ostream& err) {
  absl::StatusOr<GrayImage> a = ReadPgmFile(opts.first);
  if (!a.ok()) {
    PrintError(err, a.status());
    return 1;
  }
  absl::StatusOr<GrayImage> b = ReadPgmFile(opts.second);
  if (!b.ok()) {
    PrintError(err, b.status());
    return 1;
  }
  absl::StatusOr<double> mse = Mse(*a, *b);
  if (!mse.ok()) {
    PrintError(err, mse.status());
    return 1;
  }
  out << absl::StrFormat("mse %.6f\n", *mse);
  out << "psnr_db " << FormatPsnr(PsnrFromMse(*mse)) << "\n";
  return 0;
}

int ParseArgs(int argc, const char* const* argv, ParsedArgs& parsed,
              std::ostream& out, std::ostream& err) {
  CLI::App app{"Salt-and-pepper noise injection, removal and benchmarking"};
  app.name("spdenoise");
  app.require_subcommand(1);

  CLI::App* inject = app.add_subcommand("inject", "Add salt-and-pepper noise");
  inject->add_option("input", parsed.inject.input, "Clean PGM")->required();
  inject->add_option("output", parsed.inject.output, "Noisy PGM to write")
      ->required();
  inject->add_option("--density", parsed.inject.density, "Noise density p")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  inject->add_option("--salt-fraction", parsed.inject.salt_fraction,
                     "Share of corrupted pixels set to 255")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  inject->add_option("--seed", parsed.inject.seed, "RNG seed")
      ->capture_default_str();
  inject->add_option("--mask-out", parsed.inject.mask_out,
                     "Write the ground-truth mask (255 = corrupted)");

  CLI::App* denoise = app.add_subcommand("denoise", "Remove impulse noise");
  denoise->add_option("input", parsed.denoise.input, "Noisy PGM")->required();
  denoise->add_option("output", parsed.denoise.output, "Restored PGM")
      ->required();
  denoise->add_option("--filter", parsed.denoise.filter,
                      "proposed, smf, amf or none")
      ->transform(CLI::CheckedTransformer(FilterNames()))
      ->option_text("FILTER [proposed]");
  denoise->add_option("--reference", parsed.denoise.reference,
                      "Clean PGM; prints MSE and PSNR against it");
  AddFilterFlags(denoise, parsed.denoise.config, parsed.denoise.amf);

  CLI::App* sweep = app.add_subcommand("sweep", "PSNR over a density sweep");
  sweep->add_option("input", parsed.sweep.input, "Clean PGM")->required();
  sweep->add_option("--density", parsed.sweep.spec.densities,
                    "Comma-separated densities in (0, 1]")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--filter", parsed.sweep.spec.filters,
                    "Comma-separated filters from proposed, smf, amf, none")
      ->delimiter(',')
      ->transform(CLI::CheckedTransformer(FilterNames()))
      ->option_text("FILTER,...");
  sweep->add_option("--seed", parsed.sweep.spec.seed,
                    "Base seed; density i uses seed + i")
      ->capture_default_str();
  sweep->add_option("--salt-fraction", parsed.sweep.spec.salt_fraction,
                    "Share of corrupted pixels set to 255")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  sweep->add_option("--csv", parsed.sweep.csv, "CSV output path (default stdout)");
  AddFilterFlags(sweep, parsed.sweep.spec.denoise, parsed.sweep.spec.amf);

  CLI::App* psnr = app.add_subcommand("psnr", "MSE and PSNR of two PGMs");
  psnr->add_option("first", parsed.psnr.first, "PGM")->required();
  psnr->add_option("second", parsed.psnr.second, "PGM")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  if (inject->parsed()) parsed.command = Command::kInject;
  if (denoise->parsed()) parsed.command = Command::kDenoise;
  if (sweep->parsed()) parsed.command = Command::kSweep;
  if (psnr->parsed()) parsed.command = Command::kPsnr;
  return -1;
}

int Main(int argc, const char* const* argv, std::ostream& out,
         std::ostream& err) {
  ParsedArgs parsed;
  if (int code = ParseArgs(argc, argv, parsed, out, err); code >= 0) {
    return code;
  }
  switch (parsed.command) {
    case Command::kInject:
      return RunInject(parsed.inject, out, err);
    case Command::kDenoise:
      return RunDenoise(parsed.denoise, out, err);
    case Command::kSweep:
      return RunSweep(parsed.sweep, out, err);
    case Command::kPsnr:
      return RunPsnr(parsed.psnr, out, err);
    case Command::kNone:
      break;
  }
  return 1;
}

}  // namespace spdenoise::cli
