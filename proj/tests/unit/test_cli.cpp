#include <doctest.h>

#include <CLI11.hpp>
#include <sstream>
#include <string>

#include "cli/commands.hpp"

using namespace gaussdiss;
using namespace gaussdiss::cli;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(const std::string& args) {
  CLI::App app;
  CliOptions opts;
  build_cli(app, opts);
  Run r;
  try {
    app.parse(args, false);
  } catch (const CLI::ParseError&) {
    r.code = kValidationError;
    return r;
  }
  std::ostringstream out, err;
  r.code = dispatch(app, opts, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("evolve writes the trajectory table") {
  const auto r = run("--r0 1 --t-end 30 --samples 512 evolve");
  CHECK(r.code == kOk);
  CHECK(r.out.rfind("t,nu,r,phi,alpha_re,alpha_im,D,entropy\n", 0) == 0);
  CHECK(count_lines(r.out) == 513);
  CHECK(r.out.find("\n0,0,1,0,0,0,0.25,0\n") != std::string::npos);
}

TEST_CASE("preset file with flag override") {
  const auto r = run("--config \"" GAUSSDISS_PRESET_DIR "/fig1.cfg\" --nu0 3 --samples 3 evolve");
  CHECK(r.code == kOk);
  CHECK(count_lines(r.out) == 4);
  CHECK(r.out.find("\n0,3,1,") != std::string::npos);
}

TEST_CASE("pnd rows") {
  auto r = run("--r0 1 pnd --t 0 --n-max 3");
  CHECK(r.code == kOk);
  CHECK(r.out.rfind("n,p_n\n0,0.6480542736638853", 0) == 0);
  CHECK(r.out.find("\n1,0\n") != std::string::npos);
  CHECK(count_lines(r.out) == 5);
  CHECK(run("--nu0 3 pnd").code == kOk);
  CHECK(run("pnd --t -1").code == kValidationError);
  CHECK(run("pnd --n-max -2").code == kValidationError);
}

TEST_CASE("wigner grid") {
  const auto r = run("wigner --nx 3 --np 3 --x-min -1 --x-max 1 --p-min -1 --p-max 1");
  CHECK(r.code == kOk);
  CHECK(count_lines(r.out) == 10);
  CHECK(r.out.find("\n0,0,0.31830988618379") != std::string::npos);
  CHECK(run("wigner --nx 3 --np 3 --form series-corrected").code == kOk);
  CHECK(run("wigner --form nonsense").code == kValidationError);
  CHECK(run("wigner --nx 5000 --np 5000").code == kValidationError);
}

TEST_CASE("tc report") {
  auto r = run("--r0 1 --nu0 3 tc");
  CHECK(r.code == kOk);
  CHECK(r.out.find("t_c_closed = 0\n") != std::string::npos);
  CHECK(r.out.find("visible = false\n") != std::string::npos);
  CHECK(r.out.find("nu_bound = 1.381097845541") != std::string::npos);
  r = run("--r0 0 --nu0 0 tc");
  CHECK(r.out.find("nu_bound = 0\n") != std::string::npos);
  r = run("--r0 1 --k 0 tc");
  CHECK(r.code == kOk);
  CHECK(r.out.find("t_c_closed = none") != std::string::npos);
}

TEST_CASE("validate with no states") {
  const auto r = run("validate --n-states 0");
  CHECK(r.code == kOk);
  CHECK(r.err.find("warning") != std::string::npos);
  CHECK(run("validate --dim 0").code == kValidationError);
}

TEST_CASE("validate reports states that do not fit the truncation") {
  const auto r = run("validate --dim 10 --r0-min 1.5 --n-states 2");
  CHECK(r.code == kToleranceBreach);
  CHECK(r.out.find("state 0 failed: dimension 10") != std::string::npos);
  CHECK(r.out.find("state 1 failed: dimension 10") != std::string::npos);
}

TEST_CASE("input errors map to exit code 2") {
  CHECK(run("--r0 -1 evolve").code == kValidationError);
  CHECK(run("--nu0 -0.5 evolve").code == kValidationError);
  CHECK(run("--k -1 evolve").code == kValidationError);
  CHECK(run("--samples 1 evolve").code == kValidationError);
  CHECK(run("--t-start 5 --t-end 1 evolve").code == kValidationError);
  CHECK(run("--bogus 1 evolve").code == kValidationError);
  CHECK(run("evolve --r0 1").code == kOk);  // global flags after the subcommand
  CHECK(run("").code == kValidationError);
}

TEST_CASE("unwritable output maps to exit code 3") {
  CHECK(run("--out /nonexistent-dir/x.csv evolve").code == kIoError);
}

}
