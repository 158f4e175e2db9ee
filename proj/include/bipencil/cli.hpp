/*
 * Copyright 2026 The bipencil Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bipencil {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitPass = 0, kExitCertificateFailure = 1, kExitValidation = 2 };

/// Entry point of the `bipencil` tool; args excludes the program name.
/// Commands: algebra check, build, verify {involutivity|independence|
/// admissibility|kronecker|all}, flow run, golden sl2-example.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bipencil
