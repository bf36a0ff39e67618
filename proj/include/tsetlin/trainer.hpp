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
#include <optional>
#include <vector>

#include "tsetlin/feedback.hpp"
#include "tsetlin/pool.hpp"
#include "tsetlin/rng.hpp"

namespace tsetlin {

/// Per-epoch training summary. Metric fields are filled in by callers that
/// evaluate the model after the epoch.
struct EpochReport {
  int epoch = 0;
  double seconds = 0.0;
  std::vector<std::uint64_t> feedback_events;  // per class bank
  std::optional<double> train_metric;
  std::optional<double> test_metric;

  std::uint64_t total_feedback_events() const {
    std::uint64_t total = 0;
    for (const auto count : feedback_events) total += count;
    return total;
  }
};

/// One bank of clauses per class, all sharing a single configuration.
struct MultiClassTM {
  TMConfig config;
  std::vector<ClassBank> banks;

  MultiClassTM(TMConfig cfg, int feature_count, int num_classes);

  int feature_count() const { return banks.front().feature_count(); }
  int num_banks() const { return static_cast<int>(banks.size()); }
};

/// One decentralized clause-update pass: for `batch` draws from the example
/// order (the shared permutation, walked from `offset`; natural order when
/// empty), the clause is gated on the pre-recorded tally of its class, fed
/// Type I or Type II feedback, re-evaluated, and the tally delta published.
/// Returns the number of feedback events issued.
std::uint64_t update_clause(ClassBank& bank, int j, ExamplePool& pool,
                            int class_idx, std::span<const std::int32_t> order,
                            std::int64_t offset, std::int64_t batch, int margin,
                            double s, bool boost_true_positive, Rng& rng);

/// Classical sequential epoch: for every example of a seeded shuffle, the
/// vote sum is computed fresh (no tallies) for the target-class bank and for
/// one uniformly drawn other-class bank, and every clause of those two banks
/// is gated and fed back.
EpochReport train_epoch_sequential(MultiClassTM& tm, const ExamplePool& pool,
                                   int epoch);

/// Asynchronous epoch: all clauses are partitioned round-robin across
/// `workers` peer threads and each runs a full-pool update_clause pass
/// concurrently, with no synchronization beyond the indivisible tally adds.
/// The epoch end is the only barrier.
EpochReport train_epoch_parallel(MultiClassTM& tm, ExamplePool& pool,
                                 int workers, int epoch);

/// Majority-vote class decision (prediction mode). A single-bank machine is
/// read as a binary classifier via the unit step on its vote sum; otherwise
/// the argmax class wins with ties broken toward the lowest index.
int classify(const MultiClassTM& tm, std::span<const std::uint64_t> literals);

/// Prediction-mode vote sum per class, usable as a novelty/confidence
/// feature vector downstream.
std::vector<std::int32_t> export_vote_sums(
    const MultiClassTM& tm, std::span<const std::uint64_t> literals);

std::vector<std::int32_t> predict_all(const MultiClassTM& tm,
                                      const ExamplePool& pool);
double evaluate_accuracy(const MultiClassTM& tm, const ExamplePool& pool);

}  // namespace tsetlin
