// Copyright 2026 The ontovsm Authors
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

#ifndef ONTOVSM_CLI_APP_H_
#define ONTOVSM_CLI_APP_H_

#include <ostream>
#include <string>
#include <vector>

namespace ontovsm::cli {

// Runs the command line `args` (program name excluded). Returns the process
// exit status; diagnostics go to `err`, dump-terms output to `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ontovsm::cli

#endif  // ONTOVSM_CLI_APP_H_
