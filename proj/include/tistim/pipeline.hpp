#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tistim/electrode.hpp"
#include "tistim/interference.hpp"
#include "tistim/metrics.hpp"
#include "tistim/solver.hpp"
#include "tistim/types.hpp"

namespace tistim {

/// Bad or inconsistent run configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ShellSpec {
  int compartment = 0;
  double outer_radius_mm = 0.0;
};

struct ElectrodeConfig {
  std::string label;
  std::optional<Vec3> direction;  // required for generated meshes
  double diameter_mm = 0.0;
  double rc_ohm = 270.0;
};

struct PerturbationConfig {
  std::string electrode;
  double d_rc_ohm = 0.0;
};

struct SteeringConfig {
  double total_ma = 0.0;
  std::vector<double> left_splits_ma;
};

/// Parsed run configuration. Physical keys carry their unit in the name
/// (`_mm`, `_ohm`, `_farad`, `_hz`, `_ma`, `_db`).
struct RunConfig {
  // mesh: either a file or a layered-sphere generator
  std::optional<std::filesystem::path> mesh_file;
  std::vector<ShellSpec> shells;  // innermost first
  double edge_mm = 0.0;

  std::optional<std::filesystem::path> tissue_csv;  // builtin table when empty
  bool with_permittivity = true;

  std::vector<ElectrodeConfig> electrodes;
  double rdl_ohm = 10000.0;
  double cdl_farad = 1.0e-7;
  CapacitorSign capacitor_sign = CapacitorSign::negative;

  double frequency_hz = 1000.0;
  double beat_hz = 10.0;

  std::vector<std::array<std::string, 2>> pairs;  // (sink, source) labels
  std::vector<Eigen::VectorXd> patterns_ma;       // one entry per electrode
  std::vector<PerturbationConfig> perturbations;

  double dynamic_range_db = -35.0;
  double threshold_db = -18.0;
  double floor_db = kDefaultDbFloor;
  EnvelopeReduction reduction = EnvelopeReduction::component_modulus;
  std::optional<SteeringConfig> steering;

  SolveOptions solver;
  std::filesystem::path out_dir = "out";
  std::uint64_t seed = 0;

  std::string source_text;               // raw config, hashed into the manifest
  std::filesystem::path base_dir = ".";  // relative paths resolve here

  static RunConfig parse(const std::string& json_text, const std::filesystem::path& base_dir = ".");
  static RunConfig load(const std::filesystem::path& path);
  /// Throws ConfigError.
  void validate() const;
  Index electrode_index(const std::string& label) const;
};

struct ManifestEntry {
  std::string path;  // relative to the output directory
  std::string sha256;
};

struct RunManifest {
  std::string command;
  bool complete = false;
  std::string failed_stage;
  std::string error;
  std::vector<ManifestEntry> inputs;
  std::vector<ManifestEntry> products;

  std::string to_text() const;
  static RunManifest parse(const std::string& text);
  const ManifestEntry* find(const std::string& path) const;
};

RunManifest read_manifest(const std::filesystem::path& dir);
/// Problems found (missing files, hash mismatches); empty when consistent.
std::vector<std::string> verify_manifest(const std::filesystem::path& dir, const RunManifest& manifest);

enum class Target { mesh, assemble, solve, leadfield, linearize, interfere, full };

struct RunOptions {
  int verbosity = 1;
  std::function<void(const std::string&)> log;  // stderr when empty
};

/// Runs every stage needed for `target` and writes products, manifest.txt
/// and timings.txt under `config.out_dir`. A failing stage is recorded in the
/// manifest (status incomplete) and rethrown with the stage name prefixed,
/// preserving the exception category.
RunManifest execute(const RunConfig& config, Target target, const RunOptions& options = {});

/// Per-tet magnitudes of a stored field product: `tet,value` CSV as is,
/// vector CSV by Euclidean norm, lead-field coo by per-tet Frobenius norm.
Eigen::VectorXd load_field_magnitudes(const std::filesystem::path& path);

struct NamedDiff {
  std::string product;
  DiffReport report;
};

/// Diffs every field product present in both manifests (g1 from `a`, g2 from
/// `b`). Throws std::invalid_argument when meshes differ.
std::vector<NamedDiff> compare_runs(const std::filesystem::path& a, const std::filesystem::path& b, double db);

/// CSV `product,max_rel,mean_rel,max_abs,max_g1,max_g2,norm_g1,norm_g2`.
std::string compare_summary_csv(const std::vector<NamedDiff>& diffs);

}  // namespace tistim
