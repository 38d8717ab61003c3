// Copyright 2026 The rfdgraph Authors
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

#ifndef RFD_CLI_HPP_
#define RFD_CLI_HPP_

#include <iosfwd>

namespace rfd {

// Exit statuses of the rfdcheck tool.
inline constexpr int kExitOk = 0;            // RFD / dense / valid / command succeeded
inline constexpr int kExitNegative = 1;      // not RFD / not dense / invalid witness
inline constexpr int kExitInputError = 2;    // unreadable or malformed input, bad flags
inline constexpr int kExitDisagreement = 3;  // density check contradicts the verdict

// Runs the command line; the report goes to `out` (or --output), diagnostics
// to `err`. `tty` says whether `out` is a terminal, for RFD_COLOR=auto.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            bool tty = false);

}  // namespace rfd

#endif  // RFD_CLI_HPP_
