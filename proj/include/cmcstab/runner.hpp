#pragma once

// Command implementations behind the CLI: single-spectrum runs, the built-in
// verification suite (spectral surfaces + formula-level bound checks +
// refinement ladders), and deterministic parameter sweeps on a worker pool.

#include <cstdint>
#include <string>

#include "cmcstab/bounds.hpp"
#include "cmcstab/config.hpp"

namespace cmcstab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitBound = 4;
inline constexpr int kExitSweep = 5;

struct RunContext {
  RunConfig cfg;
  std::string out_dir;  // resolved output directory
  int jobs = 1;
  std::uint64_t seed = 0x5eed5eedULL;
};

int cmd_spectrum(const RunContext& ctx);
int cmd_verify(const RunContext& ctx);
int cmd_sweep(const RunContext& ctx);

// OFF export (chart coordinates) and per-vertex data sidecar; rho may be
// empty. Every file embeds the config hash and the eigenvalue convention.
void write_off(const GeometryMesh& mesh, const std::string& path, std::uint64_t config_hash);
void write_sidecar(const GeometryMesh& mesh, const std::string& path, std::uint64_t config_hash,
                   const Eigen::VectorXd* rho = nullptr);

EigenOptions solver_options(const RunConfig& cfg, std::uint64_t seed);

}  // namespace cmcstab
