/**
 * Copyright 2026 The tsetlin-cpp authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <vector>

namespace tsetlin {

/// Entry point behind the `tm` binary. Subcommands: train, eval, bench,
/// synth. Returns 0 on success, 2 when an input file is missing, nonzero
/// otherwise.
int run_cli(int argc, const char* const* argv);

/// Convenience for tests: args exclude the program name.
int run_cli(const std::vector<std::string>& args);

}  // namespace tsetlin
