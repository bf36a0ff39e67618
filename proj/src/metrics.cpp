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

#include "tsetlin/metrics.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace tsetlin {

namespace {

void check_lengths(std::size_t predictions, std::size_t truths) {
  if (predictions == 0 || predictions != truths) {
    throw std::invalid_argument(
        "metrics need equal, nonempty prediction/truth vectors");
  }
}

}  // namespace

ClassificationMetrics classification_metrics(
    std::span<const std::int32_t> predictions,
    std::span<const std::int32_t> truths) {
  check_lengths(predictions.size(), truths.size());

  struct Tallies {
    std::int64_t tp = 0, fp = 0, fn = 0;
  };
  std::map<std::int32_t, Tallies> per_class;
  std::int64_t correct = 0;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    const auto predicted = predictions[i];
    const auto truth = truths[i];
    if (predicted == truth) {
      ++correct;
      ++per_class[truth].tp;
    } else {
      ++per_class[predicted].fp;
      ++per_class[truth].fn;
    }
  }

  double f1_sum = 0.0;
  for (const auto& [label, t] : per_class) {
    const double precision =
        t.tp + t.fp > 0 ? static_cast<double>(t.tp) / static_cast<double>(t.tp + t.fp) : 0.0;
    const double recall =
        t.tp + t.fn > 0 ? static_cast<double>(t.tp) / static_cast<double>(t.tp + t.fn) : 0.0;
    f1_sum += precision + recall > 0.0
                  ? 2.0 * precision * recall / (precision + recall)
                  : 0.0;
  }

  ClassificationMetrics metrics;
  metrics.accuracy =
      static_cast<double>(correct) / static_cast<double>(truths.size());
  metrics.macro_f1 = f1_sum / static_cast<double>(per_class.size());
  return metrics;
}

double mean_absolute_error(std::span<const double> predictions,
                           std::span<const double> truths) {
  check_lengths(predictions.size(), truths.size());
  double total = 0.0;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    total += std::abs(predictions[i] - truths[i]);
  }
  return total / static_cast<double>(truths.size());
}

}  // namespace tsetlin
