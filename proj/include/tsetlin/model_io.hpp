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

#include <filesystem>
#include <iosfwd>
#include <variant>

#include "tsetlin/regression.hpp"
#include "tsetlin/trainer.hpp"

namespace tsetlin {

/// Versioned textual model record: configuration plus every automaton
/// counter. Identical models serialize to identical bytes.
void save_model(std::ostream& out, const MultiClassTM& tm);
void save_model(std::ostream& out, const RegressionHead& head);

using AnyModel = std::variant<MultiClassTM, RegressionHead>;
AnyModel load_model(std::istream& in);

void save_model_file(const std::filesystem::path& path, const MultiClassTM& tm);
void save_model_file(const std::filesystem::path& path,
                     const RegressionHead& head);
AnyModel load_model_file(const std::filesystem::path& path);

}  // namespace tsetlin
