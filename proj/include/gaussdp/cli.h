// Copyright 2026 The gaussdp Authors
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

#ifndef GAUSSDP_CLI_H_
#define GAUSSDP_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace gaussdp {

// Runs one tool invocation. `args` excludes the program name. All regular
// output goes to `out`, diagnostics to `err`. Commands are stateless and
// their output is a pure function of the arguments, so repeated calls
// produce byte-identical streams.
//
// Exit statuses: 0 success, 2 usage error, 3 domain/unsatisfiable error,
// 4 convergence failure.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace gaussdp

#endif  // GAUSSDP_CLI_H_
