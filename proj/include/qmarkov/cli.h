// Copyright 2026 The qmarkov Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qmarkov::cli {

/// Process exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,     // gate-check identity above tolerance, I/O trouble
  kValidation = 2,  // bad arguments, spec files or domain errors
  kCapacity = 3,    // register wider than the statevector capacity
};

/// Runs one command line (without the program name) and returns its exit
/// code. Normal output goes to `out`, diagnostics to `err`.
///
/// Commands: compile, run, oracle, fidelity, gate-check. The statevector
/// capacity defaults to 24 qubits and is overridden by QSIM_MAX_QUBITS.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmarkov::cli
