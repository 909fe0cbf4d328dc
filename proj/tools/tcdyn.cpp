#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tcdyn/harness.hpp"
#include "tcdyn/kernels.hpp"
#include "tcdyn/version.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Qubit-oscillator dynamics runner"};
  app.set_version_flag("--version", std::string("tcdyn ") + tcdyn::kVersion);
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Evaluate a scenario config and write output tables");
  std::string config;
  std::string out_dir = ".";
  std::string engines;
  std::string format;
  bool strict = false;
  run->add_option("config", config, "Scenario config (JSON)")->required();
  run->add_option("--out", out_dir, "Output directory");
  run->add_flag("--strict", strict, "Exit 3 when the requested engines are outside their validity region");
  run->add_option("--engines", engines, "Comma-separated subset of Exact,Adiabatic,Analytic,RWA");
  run->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* info = app.add_subcommand("info", "Print build and kernel information");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  if (*info) {
    std::cout << "tcdyn " << tcdyn::kVersion << "\nkernels: " << tcdyn::kernels::active().name << '\n';
    return 0;
  }

  tcdyn::harness::RunOptions opts;
  opts.out_dir = out_dir;
  opts.strict = strict;
  try {
    if (!engines.empty()) opts.engines = tcdyn::harness::parse_engines(engines);
  } catch (const tcdyn::harness::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }
  if (format == "csv") opts.format = tcdyn::harness::Format::Csv;
  if (format == "json") opts.format = tcdyn::harness::Format::Json;

  std::string message;
  const int status = tcdyn::harness::run(config, opts, message);
  if (!message.empty()) std::cerr << message << (message.back() == '\n' ? "" : "\n");
  return status;
}
