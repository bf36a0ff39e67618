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

#include "tsetlin/trainer.hpp"

namespace tsetlin {

/// Regression head: one bank of all-positive clauses whose output count,
/// clipped to [0, T], decodes linearly into the target range. The margin T
/// doubles as the resolution of the scale.
struct RegressionHead {
  TMConfig config;
  double y_min;
  double y_max;
  ClassBank bank;

  RegressionHead(TMConfig cfg, int feature_count, double y_min, double y_max);
};

/// Integer target on the [0, T] scale; throws if y lies outside the range.
int scaled_target(const RegressionHead& head, double y);

/// Clipped prediction-mode clause count, in [0, T].
int predict_scaled(const RegressionHead& head,
                   std::span<const std::uint64_t> literals);

/// Decoded estimate: y_min + v * (y_max - y_min) / T.
double predict_regress(const RegressionHead& head,
                       std::span<const std::uint64_t> literals);

/// One sequential update against a raw target: every clause is gated with
/// probability |t - v| / 2T, receiving Type I feedback when the head
/// under-predicts (grow patterns) and Type II when it over-predicts (prune
/// false matches). Returns the number of feedback events.
std::uint64_t update_regress(RegressionHead& head,
                             std::span<const std::uint64_t> literals,
                             double y_target, Rng& rng);

/// Sequential epoch over a pool whose labels are pre-scaled targets.
EpochReport train_epoch_regress_sequential(RegressionHead& head,
                                           const ExamplePool& pool, int epoch);

/// Asynchronous epoch: clause-per-worker updates gated on the shared tally,
/// sharing the classification trainer's delta machinery.
EpochReport train_epoch_regress_parallel(RegressionHead& head,
                                         ExamplePool& pool, int workers,
                                         int epoch);

/// Mean absolute error against the pool's scaled integer targets.
double evaluate_scaled_mae(const RegressionHead& head, const ExamplePool& pool);

}  // namespace tsetlin
