#include <CLI11.hpp>
#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Gaussian states in a dissipative thermal channel"};
  gaussdiss::cli::CliOptions opts;
  gaussdiss::cli::build_cli(app, opts);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : gaussdiss::cli::kValidationError;
  }
  return gaussdiss::cli::dispatch(app, opts, std::cout, std::cerr);
}
