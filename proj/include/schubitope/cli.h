// Copyright 2026 The Schubitope Authors.
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

#ifndef SCHUBITOPE_CLI_H_
#define SCHUBITOPE_CLI_H_

#include <ostream>
#include <span>
#include <string>

namespace schubitope {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Documents go to `out`,
// diagnostics to `err`. Returns the process exit status.
int RunCli(std::span<const std::string> args, std::ostream& out,
           std::ostream& err);

}  // namespace schubitope

#endif  // SCHUBITOPE_CLI_H_
