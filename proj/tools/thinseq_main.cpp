#include <iostream>

#include <CLI11.hpp>

#include "thinseq/app/commands.hpp"

int main(int argc, char** argv) {
  using namespace thinseq::app;
  CLI::App app{"Thin interpolating sequences: sweeps, verification suites and interpolation"};
  app.require_subcommand(1);

  CliOptions opts;
  std::string out, format;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  for (const char* verb : {"analyze", "verify", "interpolate", "generate"}) {
    auto* sub = app.add_subcommand(verb);
    sub->add_option("--config", opts.config, "YAML run configuration")->check(CLI::ExistingFile);
    sub->add_option("--out", out, "output path (default: stdout)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  }
  app.get_subcommand("analyze")->description("per-N sweep of the window constants");
  app.get_subcommand("verify")->description("run the verification suites");
  app.get_subcommand("interpolate")->description("solve an interpolation problem from a targets file");
  app.get_subcommand("generate")->description("list the points of a sequence with their separation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  auto* sub = app.get_subcommands().front();
  if (sub->count("--out")) opts.out = out;
  if (sub->count("--format")) opts.format = format;
  if (sub->count("--seed")) opts.seed = seed;
  if (sub->count("--jobs")) opts.jobs = jobs;
  return run_command(sub->get_name(), opts, std::cout, std::cerr);
}
