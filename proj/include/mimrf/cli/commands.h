/*
 * Copyright 2026 The MIMRF Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MIMRF_CLI_COMMANDS_H_
#define MIMRF_CLI_COMMANDS_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace mimrf::cli {

// Runs the command line `args` (args[0] is the program name) and returns the
// process exit status: 0 on success, 1 when a command fails, 2 on usage
// errors. Output goes to `out`, diagnostics to `err`.
//
// Subcommands: synth, train, fuse, score, confidence. Each accepts
// --config <json>; explicit flags take precedence over config keys, which
// take precedence over defaults.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mimrf::cli

#endif  // MIMRF_CLI_COMMANDS_H_
