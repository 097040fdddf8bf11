#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mcfprof/flow.hpp"
#include "mcfprof/io.hpp"
#include "mcfprof/rescaling.hpp"

namespace mcfprof {

struct HarnackConfig {
  double R = 1.0;
  /// Neck points qualify when H >= factor * initial max H; one entry per
  /// reported threshold.
  std::vector<double> H_threshold{10.0};
};

struct BlowupConfig {
  /// "neck" (waist node of each snapshot) or "max-curvature" (node of
  /// largest H).
  std::string points = "neck";
  /// Centres need H >= factor * initial max H.
  double H_threshold = 10.0;
  /// Fit and comparison radius in rescaled units.
  double window = 2.0;
  /// Rescaled time span kept behind each centre.
  double time_window = 1.0;
};

struct DiagnosticsConfig {
  bool noncollapse = true;
  bool pinching = true;
  bool ratio_A2_H2 = true;
  bool H_evolution = false;
  std::size_t H_evolution_stride = 1;
  std::optional<HarnackConfig> harnack;
  std::optional<BlowupConfig> blowup;
  bool distance_scaling = false;
  double ladder_ratio = 4.0;
};

struct RunConfig {
  std::string name;
  int n = 2;
  /// Tagged initial datum as written in the file, defaults filled in.
  json initial;
  std::size_t nodes = 400;
  StepControl step;
  RecordSchedule record;
  DiagnosticsConfig diagnostics;
  std::uint64_t seed = 0;
  double perturbation = 0.0;
  std::filesystem::path output_dir = "out";
  /// Directory that relative paths in the config resolve against.
  std::filesystem::path base_dir = ".";
};

/// Throws ErrorKind::config naming the offending field path.
RunConfig parse_config(const json& doc, const std::filesystem::path& base_dir = ".");
RunConfig load_config(const std::filesystem::path& file);
/// Canonical echo of a parsed config (every field explicit).
json config_to_json(const RunConfig& config);

FlowSnapshot build_initial(const RunConfig& config);

/// All enabled diagnostics evaluated on a (stored) trajectory.
json build_report(const RunConfig& config, const Trajectory& traj);

/// Files of a finished run, relative to its directory, with SHA-256 digests.
struct DigestCheck {
  std::vector<std::string> missing;
  std::vector<std::string> mismatched;
  bool ok() const { return missing.empty() && mismatched.empty(); }
};
DigestCheck verify_manifest(const std::filesystem::path& dir);

/// Reads a run directory back into a trajectory (snapshots, recorded
/// triplets, singular estimate; no per-step rows) plus its config.
std::pair<RunConfig, Trajectory> load_run(const std::filesystem::path& dir);

int exit_code(ErrorKind kind) noexcept;

struct RunOptions {
  std::filesystem::path config;
  std::optional<std::filesystem::path> out;
  std::optional<std::size_t> nodes;
  std::optional<std::uint64_t> seed;
};

int command_run(const RunOptions& options, std::ostream& out, std::ostream& err);

/// Parses "x=<c1>[,<c2>[,<c3>]],t=<time>" (native coordinates).
SpacetimePoint parse_spacetime_point(const std::string& text);

struct AnalyzeOptions {
  std::filesystem::path dir;
  std::optional<std::string> blowup_at;
  std::optional<double> window;
};

/// Without a blow-up point, re-derives report.json in place; with one, prints
/// the blow-up analysis as JSON on `out`.
int command_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);

int command_models_check(std::ostream& out);

}  // namespace mcfprof
