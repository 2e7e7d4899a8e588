// Copyright 2026 The Parity Factor Kit Authors.
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

#ifndef PFK_TOOLS_CLI_H_
#define PFK_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace pfk::cli {

// Process exit statuses. No other values are returned.
enum ExitCode : int {
  kExists = 0,
  kUsageError = 2,
  kInputError = 3,  // unreadable or malformed input, or an enumeration cap
  kNotExists = 4,
};

// Runs one invocation. `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pfk::cli

#endif  // PFK_TOOLS_CLI_H_
