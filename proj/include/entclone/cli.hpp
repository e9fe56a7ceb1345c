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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace entclone {

struct VerifyOptions {
  std::uint64_t seed = 42;
  int trials = 1000;
  bool inject_perturbation = false;  // test hook: breaks the covariance check
  std::string export_choi_path;
  std::string import_choi_path;
};

/// `name,value` lines for the library's key constants (9 decimal places).
void run_constants(std::ostream& out);

/// CSV frontier sweep: F_b,F_a,E_a,E_b,E_sum.
void run_fig1(int points, std::ostream& out);

/// CSV entanglement-in/out curve: E_in,E_out.
void run_fig2(int points, std::ostream& out);

/// Channel verification suite; returns 0 iff every check passes.
int run_verify(const VerifyOptions& options, std::ostream& out);

/// Run one optimizer mode: symmetric, weighted:<p>, isometry:fidelity or
/// isometry:concurrence. Throws std::invalid_argument on a bad mode string.
void run_optimize(const std::string& mode, int restarts, std::uint64_t seed,
                  std::ostream& out);

}  // namespace entclone
