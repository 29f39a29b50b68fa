// Copyright 2026 The Authors.
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

// Command-line front end: gen, select, bench and analyze.

#ifndef KREGRET_TOOLS_COMMANDS_H_
#define KREGRET_TOOLS_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace kregret::cli {

// Runs one invocation; args excludes the program name. Returns the process
// exit code. Usage errors return 2, runtime failures 1.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace kregret::cli

#endif  // KREGRET_TOOLS_COMMANDS_H_
