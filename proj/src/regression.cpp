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

#include "tsetlin/regression.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace tsetlin {

namespace {

constexpr std::uint64_t kRegressSequentialStream = 4;
constexpr std::uint64_t kRegressPermutationStream = 5;
constexpr std::uint64_t kRegressWorkerStream = 6;

std::uint64_t mix_stream(std::uint64_t kind, std::uint64_t a,
                         std::uint64_t b = 0) {
  std::uint64_t x = kind;
  x = split_mix64(x) ^ a;
  x = split_mix64(x) ^ b;
  return split_mix64(x);
}

std::uint64_t clause_offset(std::uint64_t global_index, int pool_size) {
  std::uint64_t x = global_index + 1;
  return split_mix64(x) % static_cast<std::uint64_t>(pool_size);
}

double gate_probability(int t, int v, int margin) {
  return std::min(1.0, std::abs(t - v) / (2.0 * static_cast<double>(margin)));
}

// Gated Type I / Type II dispatch for one clause against scaled target t and
// clipped vote v. Type I grows patterns when under-predicting, Type II prunes
// false matches when over-predicting.
std::uint64_t feed_clause_regress(RegressionHead& head, int j,
                                  std::span<const std::uint64_t> literals,
                                  int t, int v, Rng& rng) {
  const double p = gate_probability(t, v, head.config.margin);
  if (rng.uniform() >= p) return 0;
  const int output = evaluate_clause(head.bank, j, literals, EvalMode::Train);
  if (v < t) {
    detail::type_i_with_output(head.bank, j, literals, output,
                               head.config.specificity,
                               head.config.boost_true_positive, rng);
  } else {
    detail::type_ii_with_output(head.bank, j, literals, output);
  }
  return 1;
}

}  // namespace

RegressionHead::RegressionHead(TMConfig cfg, int feature_count, double y_min,
                               double y_max)
    : config(cfg),
      y_min(y_min),
      y_max(y_max),
      bank(feature_count, cfg.clauses, cfg.state_depth,
           PolarityScheme::AllPositive) {
  config.validate();
  if (!(y_max > y_min)) {
    throw std::invalid_argument("target range must satisfy y_max > y_min");
  }
}

int scaled_target(const RegressionHead& head, double y) {
  if (y < head.y_min || y > head.y_max) {
    throw std::invalid_argument("target outside [y_min, y_max]");
  }
  const double span = head.y_max - head.y_min;
  return static_cast<int>(
      std::lround((y - head.y_min) * head.config.margin / span));
}

int predict_scaled(const RegressionHead& head,
                   std::span<const std::uint64_t> literals) {
  int sum = 0;
  for (int j = 0; j < head.bank.clause_count(); ++j) {
    sum += evaluate_clause(head.bank, j, literals, EvalMode::Predict);
  }
  return std::clamp(sum, 0, head.config.margin);
}

double predict_regress(const RegressionHead& head,
                       std::span<const std::uint64_t> literals) {
  const int v = predict_scaled(head, literals);
  const double span = head.y_max - head.y_min;
  return head.y_min + v * span / head.config.margin;
}

std::uint64_t update_regress(RegressionHead& head,
                             std::span<const std::uint64_t> literals,
                             double y_target, Rng& rng) {
  const int t = scaled_target(head, y_target);
  int sum = 0;
  for (int j = 0; j < head.bank.clause_count(); ++j) {
    sum += evaluate_clause(head.bank, j, literals, EvalMode::Train);
  }
  const int v = std::clamp(sum, 0, head.config.margin);
  std::uint64_t events = 0;
  for (int j = 0; j < head.bank.clause_count(); ++j) {
    events += feed_clause_regress(head, j, literals, t, v, rng);
  }
  return events;
}

EpochReport train_epoch_regress_sequential(RegressionHead& head,
                                           const ExamplePool& pool, int epoch) {
  if (pool.feature_count() != head.bank.feature_count()) {
    throw std::invalid_argument("head/pool feature count mismatch");
  }
  const auto& cfg = head.config;
  Rng rng(cfg.seed, mix_stream(kRegressSequentialStream,
                               static_cast<std::uint64_t>(epoch)));
  const auto order = shuffled_indices(pool.size(), rng);

  EpochReport report;
  report.epoch = epoch;
  report.feedback_events.assign(1, 0);

  const auto start = std::chrono::steady_clock::now();
  for (const int i : order) {
    const auto literals = pool.literals(i);
    const int t = pool.label(i);
    int sum = 0;
    for (int j = 0; j < head.bank.clause_count(); ++j) {
      sum += evaluate_clause(head.bank, j, literals, EvalMode::Train);
    }
    const int v = std::clamp(sum, 0, cfg.margin);
    for (int j = 0; j < head.bank.clause_count(); ++j) {
      report.feedback_events[0] +=
          feed_clause_regress(head, j, literals, t, v, rng);
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  report.seconds = std::chrono::duration<double>(stop - start).count();
  if (report.seconds <= 0.0) report.seconds = 1e-9;
  return report;
}

EpochReport train_epoch_regress_parallel(RegressionHead& head,
                                         ExamplePool& pool, int workers,
                                         int epoch) {
  if (pool.feature_count() != head.bank.feature_count()) {
    throw std::invalid_argument("head/pool feature count mismatch");
  }
  if (pool.num_classes() != 1) {
    throw std::invalid_argument("regression pool must have one tally class");
  }
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  const auto& cfg = head.config;
  const int q = pool.size();
  const int n = head.bank.clause_count();
  if (head.bank.bound_examples() != q) head.bank.bind_examples(q);

  Rng perm_rng(cfg.seed, mix_stream(kRegressPermutationStream,
                                    static_cast<std::uint64_t>(epoch)));
  const auto order = shuffled_indices(q, perm_rng);

  std::vector<std::uint64_t> worker_events(static_cast<std::size_t>(workers), 0);

  EpochReport report;
  report.epoch = epoch;
  report.feedback_events.assign(1, 0);

  const auto start = std::chrono::steady_clock::now();
  {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        Rng rng(cfg.seed, mix_stream(kRegressWorkerStream,
                                     static_cast<std::uint64_t>(epoch),
                                     static_cast<std::uint64_t>(w)));
        std::uint64_t events = 0;
        for (int j = w; j < n; j += workers) {
          const auto offset =
              clause_offset(static_cast<std::uint64_t>(j), q);
          for (int step = 0; step < q; ++step) {
            const auto pos =
                static_cast<int>((offset + static_cast<std::uint64_t>(step)) %
                                 static_cast<std::uint64_t>(q));
            const int i = order[static_cast<std::size_t>(pos)];
            const int t = pool.label(i);
            const int v = std::clamp(pool.tally(i, 0), 0, cfg.margin);
            const auto literals = pool.literals(i);
            const std::uint64_t fed =
                feed_clause_regress(head, j, literals, t, v, rng);
            if (fed != 0) {
              events += fed;
              const int after =
                  evaluate_clause(head.bank, j, literals, EvalMode::Train);
              record_output_and_tally(pool, i, 0, head.bank, j, after);
            }
          }
        }
        worker_events[static_cast<std::size_t>(w)] = events;
      });
    }
    for (auto& thread : threads) thread.join();
  }
  const auto stop = std::chrono::steady_clock::now();
  report.seconds = std::chrono::duration<double>(stop - start).count();
  if (report.seconds <= 0.0) report.seconds = 1e-9;

  for (const auto events : worker_events) report.feedback_events[0] += events;
  return report;
}

double evaluate_scaled_mae(const RegressionHead& head, const ExamplePool& pool) {
  double total = 0.0;
  for (int i = 0; i < pool.size(); ++i) {
    const int v = predict_scaled(head, pool.literals(i));
    total += std::abs(static_cast<double>(v - pool.label(i)));
  }
  return total / static_cast<double>(pool.size());
}

}  // namespace tsetlin
