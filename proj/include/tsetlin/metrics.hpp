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

#include <cstdint>
#include <span>

namespace tsetlin {

struct ClassificationMetrics {
  double accuracy = 0.0;
  double macro_f1 = 0.0;  // unweighted mean of per-class F1
};

ClassificationMetrics classification_metrics(
    std::span<const std::int32_t> predictions,
    std::span<const std::int32_t> truths);

double mean_absolute_error(std::span<const double> predictions,
                           std::span<const double> truths);

}  // namespace tsetlin
