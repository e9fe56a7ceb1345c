// Copyright 2026 The entclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "entclone/cli.hpp"

namespace {

// Run a command, directing its report to --out or stdout.
template <class Fn>
int with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) return fn(std::cout);
  std::ofstream file(path);
  if (!file) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return 2;
  }
  return fn(file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covariant entanglement cloning machines for 2-qubit states"};
  app.require_subcommand(1);

  int points = 200;
  int trials = 1000;
  int restarts = 20;
  std::uint64_t seed = 42;
  std::string out_path;
  std::string mode = "symmetric";
  entclone::VerifyOptions verify_options;

  CLI::App* constants = app.add_subcommand("constants", "Print the key constants");
  constants->add_option("--out", out_path, "Output path (default stdout)");

  CLI::App* fig1 = app.add_subcommand("fig1", "Fidelity/entanglement tradeoff CSV");
  fig1->add_option("--points", points, "Grid points")->check(CLI::Range(2, 1000000));
  fig1->add_option("--out", out_path, "Output path (default stdout)");

  CLI::App* fig2 = app.add_subcommand("fig2", "Entanglement in/out CSV");
  fig2->add_option("--points", points, "Grid points")->check(CLI::Range(2, 1000000));
  fig2->add_option("--out", out_path, "Output path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "Channel verification suite");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--trials", trials, "Random trials per check")
      ->check(CLI::Range(1, 10000000));
  verify->add_option("--out", out_path, "Output path (default stdout)");
  verify->add_option("--export-choi", verify_options.export_choi_path,
                     "Write the optimal cloner's Choi operator as CSV");
  verify->add_option("--import-choi", verify_options.import_choi_path,
                     "Load a Choi CSV and re-check its PPT property");
  verify->add_flag("--inject-perturbation", verify_options.inject_perturbation, "")
      ->group("");  // hidden test hook

  CLI::App* optimize = app.add_subcommand("optimize", "Numerical optimality checks");
  optimize->add_option("--mode", mode,
                       "symmetric | weighted:<p> | isometry:fidelity | "
                       "isometry:concurrence");
  optimize->add_option("--restarts", restarts, "Multi-start count")
      ->check(CLI::Range(1, 10000));
  optimize->add_option("--seed", seed, "RNG seed");
  optimize->add_option("--out", out_path, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (constants->parsed()) {
      return with_output(out_path, [&](std::ostream& os) {
        entclone::run_constants(os);
        return 0;
      });
    }
    if (fig1->parsed()) {
      return with_output(out_path, [&](std::ostream& os) {
        entclone::run_fig1(points, os);
        return 0;
      });
    }
    if (fig2->parsed()) {
      return with_output(out_path, [&](std::ostream& os) {
        entclone::run_fig2(points, os);
        return 0;
      });
    }
    if (verify->parsed()) {
      verify_options.seed = seed;
      verify_options.trials = trials;
      return with_output(out_path, [&](std::ostream& os) {
        return entclone::run_verify(verify_options, os);
      });
    }
    if (optimize->parsed()) {
      return with_output(out_path, [&](std::ostream& os) {
        entclone::run_optimize(mode, restarts, seed, os);
        return 0;
      });
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
