// Copyright 2026 The saek Authors.
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

#ifndef SAEK_TOOLS_CLI_H_
#define SAEK_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace saek {

// Runs the command line `args` (without the program name). Utterances are
// read from `in` when no file is given. Returns the process exit code:
// 0 success, 1 per-line errors under --strict or failed checks, 2 usage.
int run_cli(const std::vector<std::string> &args, std::istream &in,
            std::ostream &out, std::ostream &err);

}  // namespace saek

#endif  // SAEK_TOOLS_CLI_H_
