// Copyright 2026 The rootcover Authors.
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

namespace rootcover::cli {

/// Process exit codes. Internal errors (a violated invariant) are kept apart
/// from every verdict.
enum ExitCode : int {
  kHolds = 0,
  kUsage = 1,
  kResource = 2,
  kFails = 3,
  kUndecided = 4,
  kInternal = 70,
};

/// Runs the command line `args` (without the program name). JSON or the
/// --pretty rendering goes to `out`, diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootcover::cli
