// Copyright 2026 The qwl Authors
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

#include <ostream>
#include <string>
#include <vector>

namespace qwl::cli {

enum ExitCode : int {
    kSuccess = 0,
    kFailure = 1, // contract or verification failure; a partial report is still printed
    kUsage = 2,   // bad flags, unknown subcommand, malformed input file
};

/// Runs one subcommand. `args` excludes the program name. The JSON report goes
/// to `out`, diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version();

} // namespace qwl::cli
