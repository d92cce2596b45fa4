#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "opsplit/commands.hpp"
#include "opsplit/config.hpp"

namespace {

struct Options {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::string suites;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config, "JSON run configuration")->check(CLI::ExistingFile);
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--seed", o.seed, "base seed");
  cmd->add_option("--suites", o.suites, "comma-separated suite tags");
}

opsplit::RunConfig build(const Options& o) {
  opsplit::RunConfig cfg = o.config.empty() ? opsplit::parse_run_config("{}")
                                            : opsplit::load_run_config(o.config);
  if (o.seed) opsplit::set_seed(cfg, *o.seed);
  if (!o.suites.empty()) opsplit::set_suites(cfg, o.suites);
  if (!o.out.empty()) cfg.out = o.out;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Check operator-splitting identities and run the averaged iteration"};
  app.require_subcommand(1);
  Options opts;
  CLI::App* verify = app.add_subcommand("verify", "run verification suites, write reports");
  CLI::App* iterate = app.add_subcommand("iterate", "iterate T from x0, write trace.csv");
  CLI::App* report = app.add_subcommand("report", "tabulate closed forms at the probe point");
  for (CLI::App* cmd : {verify, iterate, report}) add_common(cmd, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : opsplit::kExitConfig;
  }

  return opsplit::guarded(
      [&] {
        const opsplit::RunConfig cfg = build(opts);
        if (verify->parsed()) return opsplit::run_verify(cfg, std::cout);
        if (iterate->parsed()) return opsplit::run_iterate(cfg, std::cout);
        return opsplit::run_report(cfg, std::cout);
      },
      std::cerr);
}
