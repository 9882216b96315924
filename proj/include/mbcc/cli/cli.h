// Copyright 2026 The mbcc Authors
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

#ifndef MBCC_CLI_CLI_H
#define MBCC_CLI_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace mbcc::cli {

enum ExitCode : int {
    kOk = 0,
    kOtherError = 1,
    kArgumentError = 2,
    kParseError = 3,
    kResourceError = 4,
    kInvariantFailure = 5,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless -o names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace mbcc::cli

#endif
