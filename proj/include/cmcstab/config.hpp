#pragma once

// Block-structured text configuration: `name { key = value ... }` with
// nesting, `#` comments, strict unknown-key rejection (errors carry the full
// key path), and a stable content hash embedded in every output file.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmcstab/ambient.hpp"
#include "cmcstab/surface.hpp"

namespace cmcstab {

struct SpaceConfig {
  std::string kind;
  std::optional<double> c, kappa, tau, circle_length;
};

struct SurfaceConfig {
  std::string constructor;  // clifford_torus | hopf_torus | slice_sphere |
                            // round_sphere | perturbed_sphere
  std::optional<double> H, c_gamma, t, chart_radius, eps;
  std::optional<int> resolution;
  std::vector<int> resolutions;  // refinement ladder for verify
};

struct SolverConfig {
  int k = 5;
  double tol = 1e-10;
  int max_iter = 500;
  std::string shift_policy = "auto";  // "auto" or a numeric shift
};

struct VerifyConfig {
  double tol_eq = 1e-3;
  double tol_verify = 0.02;
};

struct SweepConfig {
  std::string parameter;  // "H" or "c_gamma"
  double from = 0.0, to = 0.0;
  int steps = 0;
  int max_jobs = 256;
};

struct OutputConfig {
  std::string directory = "out";
  std::vector<std::string> formats{"json", "csv"};  // subset of json,csv,off
};

struct RunConfig {
  SpaceConfig space;
  SurfaceConfig surface;
  SolverConfig solver;
  VerifyConfig verify;
  SweepConfig sweep;
  OutputConfig output;
  std::uint64_t config_hash = 0;  // FNV-1a of the canonicalized source text
};

// throws ConfigError with the offending key path on unknown keys/bad values
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);

AmbientSpace space_from_config(const SpaceConfig& cfg);
// validates constructor/space compatibility
SurfaceModel surface_from_config(const RunConfig& cfg);

std::uint64_t fnv1a_hash(const std::string& text);

}  // namespace cmcstab
