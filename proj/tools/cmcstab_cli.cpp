#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "cmcstab/errors.hpp"
#include "cmcstab/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"cmcstab: first stability eigenvalue laboratory for CMC surfaces"};
  app.require_subcommand(1);

  std::string config_path, out_dir;
  int jobs = 1;
  std::uint64_t seed = 0x5eed5eedULL;
  app.add_option("--config", config_path, "configuration file (block-structured text)");
  app.add_option("--out", out_dir, "output directory (overrides config and CMCSTAB_OUT)");
  app.add_option("--jobs", jobs, "worker pool size")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "random seed for the eigensolver start block");

  auto* sub_spectrum =
      app.add_subcommand("spectrum", "compute the lowest eigenpairs of one surface");
  auto* sub_verify =
      app.add_subcommand("verify", "run every theorem bound over the built-in surface families");
  auto* sub_sweep = app.add_subcommand("sweep", "sweep a surface parameter and tabulate lambda1");
  for (auto* s : {sub_spectrum, sub_verify, sub_sweep}) s->fallthrough();

  CLI11_PARSE(app, argc, argv);

  cmcstab::RunContext ctx;
  ctx.jobs = jobs;
  ctx.seed = seed;
  if ((sub_spectrum->parsed() || sub_sweep->parsed()) && config_path.empty()) {
    std::fprintf(stderr, "config error: --config is required for this command\n");
    return cmcstab::kExitConfig;
  }
  if (!config_path.empty()) {
    try {
      ctx.cfg = cmcstab::load_run_config(config_path);
    } catch (const cmcstab::ConfigError& e) {
      std::fprintf(stderr, "config error: %s\n", e.what());
      return cmcstab::kExitConfig;
    }
  }
  if (!out_dir.empty()) {
    ctx.out_dir = out_dir;
  } else if (const char* env = std::getenv("CMCSTAB_OUT"); env && *env) {
    ctx.out_dir = env;
  } else {
    ctx.out_dir = ctx.cfg.output.directory;
  }

  if (sub_spectrum->parsed()) return cmcstab::cmd_spectrum(ctx);
  if (sub_verify->parsed()) return cmcstab::cmd_verify(ctx);
  return cmcstab::cmd_sweep(ctx);
}
