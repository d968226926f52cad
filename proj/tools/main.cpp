#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "app/commands.hpp"

int main(int argc, char** argv) {
  using namespace epcx::app;

  CLI::App cli{"Elliptic complex numbers: verification, synthesis and IVP runs", "epcx"};
  cli.require_subcommand(1);

  RunOptions options;
  std::string config, out = ".", params;
  std::uint64_t seed = 0;
  for (Mode m : {Mode::verify, Mode::synthesize, Mode::check_associated, Mode::solve, Mode::cauchy_demo}) {
    CLI::App* sub = cli.add_subcommand(std::string(mode_name(m)));
    sub->add_option("--config", config, "JSON configuration file")->required();
    sub->add_option("--out", out, "Output directory (default: current directory)");
    sub->add_option("--seed", seed, "Seed for randomized suites");
    sub->add_option("--params", params, "Override algebra parameters: alpha,beta");
    sub->callback([m, &options] { options.mode = m; });
  }

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = cli.exit(e);
    return rc == 0 ? kOk : kConfigInvalid;
  }

  options.config = config;
  options.out = out;
  for (CLI::App* sub : cli.get_subcommands()) {
    if (sub->count("--seed") > 0) options.seed = seed;
  }
  if (!params.empty()) {
    std::istringstream ss(params);
    double alpha = 0.0, beta = 0.0;
    char comma = 0;
    if (!(ss >> alpha >> comma >> beta) || comma != ',' || !(ss >> std::ws).eof()) {
      std::cerr << "ConfigInvalid: --params expects alpha,beta\n";
      return kConfigInvalid;
    }
    options.params = epcx::AlgebraParams{alpha, beta};
  }
  return run(options, std::cout, std::cerr);
}
