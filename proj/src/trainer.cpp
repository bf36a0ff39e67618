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

#include "tsetlin/trainer.hpp"

#include <chrono>
#include <stdexcept>
#include <thread>

namespace tsetlin {

namespace {

// Stream identifiers keep the sequential trainer, the epoch permutation and
// each parallel worker on decorrelated random sequences of the same seed.
constexpr std::uint64_t kSequentialStream = 1;
constexpr std::uint64_t kPermutationStream = 2;
constexpr std::uint64_t kWorkerStream = 3;

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

void check_compatible(const MultiClassTM& tm, const ExamplePool& pool) {
  if (tm.feature_count() != pool.feature_count()) {
    throw std::invalid_argument("model/pool feature count mismatch");
  }
  if (tm.num_banks() != pool.num_classes()) {
    throw std::invalid_argument("model/pool class count mismatch");
  }
}

// Gates and feeds back every clause of one bank against a freshly computed
// vote sum, reusing the per-clause outputs from the vote pass.
std::uint64_t feed_bank_sequential(ClassBank& bank,
                                   std::span<const std::uint64_t> literals,
                                   int target, int margin, double s, bool boost,
                                   std::vector<std::uint8_t>& outputs,
                                   Rng& rng) {
  const int n = bank.clause_count();
  int sum = 0;
  for (int j = 0; j < n; ++j) {
    const int output = evaluate_clause(bank, j, literals, EvalMode::Train);
    outputs[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(output);
    sum += bank.positive(j) ? output : -output;
  }
  const double p = clause_update_probability(sum, target, margin);
  std::uint64_t events = 0;
  for (int j = 0; j < n; ++j) {
    if (rng.uniform() >= p) continue;
    ++events;
    const bool is_positive = bank.positive(j);
    if ((target == 1) != is_positive) {
      detail::type_ii_with_output(bank, j, literals,
                                  outputs[static_cast<std::size_t>(j)]);
    } else {
      detail::type_i_with_output(bank, j, literals,
                                 outputs[static_cast<std::size_t>(j)], s, boost,
                                 rng);
    }
  }
  return events;
}

}  // namespace

MultiClassTM::MultiClassTM(TMConfig cfg, int feature_count, int num_classes)
    : config(cfg) {
  config.validate();
  if (num_classes < 1) {
    throw std::invalid_argument("class count must be >= 1");
  }
  banks.reserve(static_cast<std::size_t>(num_classes));
  for (int c = 0; c < num_classes; ++c) {
    banks.emplace_back(feature_count, config.clauses, config.state_depth,
                       PolarityScheme::Alternating);
  }
}

std::uint64_t update_clause(ClassBank& bank, int j, ExamplePool& pool,
                            int class_idx, std::span<const std::int32_t> order,
                            std::int64_t offset, std::int64_t batch, int margin,
                            double s, bool boost_true_positive, Rng& rng) {
  if (batch < 1) throw std::invalid_argument("batch must be >= 1");
  const int q = pool.size();
  if (bank.bound_examples() != q) bank.bind_examples(q);
  if (!order.empty() && static_cast<int>(order.size()) != q) {
    throw std::invalid_argument("example order length must equal pool size");
  }

  std::uint64_t events = 0;
  const auto literal_count = static_cast<std::size_t>(pool.words_per_example());
  for (std::int64_t t = 0; t < batch; ++t) {
    const auto pos = static_cast<int>((offset + t) % q);
    const int i = order.empty() ? pos : order[static_cast<std::size_t>(pos)];
    const int tally = pool.tally(i, class_idx);
    const int target = pool.label(i) == class_idx ? 1 : 0;
    const double p = clause_update_probability(tally, target, margin);
    if (rng.uniform() >= p) continue;

    ++events;
    const auto literals = pool.literals(i).first(literal_count);
    const int before = evaluate_clause(bank, j, literals, EvalMode::Train);
    if ((target == 1) != bank.positive(j)) {
      detail::type_ii_with_output(bank, j, literals, before);
    } else {
      detail::type_i_with_output(bank, j, literals, before, s,
                                 boost_true_positive, rng);
    }
    const int after = evaluate_clause(bank, j, literals, EvalMode::Train);
    record_output_and_tally(pool, i, class_idx, bank, j, after);
  }
  return events;
}

EpochReport train_epoch_sequential(MultiClassTM& tm, const ExamplePool& pool,
                                   int epoch) {
  check_compatible(tm, pool);
  if (tm.num_banks() < 2) {
    throw std::invalid_argument("classification needs at least two banks");
  }

  const auto& cfg = tm.config;
  const int m = tm.num_banks();
  Rng rng(cfg.seed, mix_stream(kSequentialStream, static_cast<std::uint64_t>(epoch)));
  const auto order = shuffled_indices(pool.size(), rng);
  std::vector<std::uint8_t> outputs(static_cast<std::size_t>(cfg.clauses));

  EpochReport report;
  report.epoch = epoch;
  report.feedback_events.assign(static_cast<std::size_t>(m), 0);

  const auto start = std::chrono::steady_clock::now();
  for (const int i : order) {
    const auto literals = pool.literals(i);
    const int target_class = pool.label(i);
    int negative_class = 0;
    if (m == 2) {
      negative_class = 1 - target_class;
    } else {
      negative_class = static_cast<int>(rng.below(static_cast<std::uint32_t>(m - 1)));
      if (negative_class >= target_class) ++negative_class;
    }
    report.feedback_events[static_cast<std::size_t>(target_class)] +=
        feed_bank_sequential(tm.banks[static_cast<std::size_t>(target_class)],
                             literals, 1, cfg.margin, cfg.specificity,
                             cfg.boost_true_positive, outputs, rng);
    report.feedback_events[static_cast<std::size_t>(negative_class)] +=
        feed_bank_sequential(tm.banks[static_cast<std::size_t>(negative_class)],
                             literals, 0, cfg.margin, cfg.specificity,
                             cfg.boost_true_positive, outputs, rng);
  }
  const auto stop = std::chrono::steady_clock::now();
  report.seconds = std::chrono::duration<double>(stop - start).count();
  if (report.seconds <= 0.0) report.seconds = 1e-9;
  return report;
}

EpochReport train_epoch_parallel(MultiClassTM& tm, ExamplePool& pool,
                                 int workers, int epoch) {
  check_compatible(tm, pool);
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");

  const auto& cfg = tm.config;
  const int m = tm.num_banks();
  const int n = cfg.clauses;
  const int q = pool.size();
  const std::int64_t total_clauses = static_cast<std::int64_t>(m) * n;

  for (auto& bank : tm.banks) {
    if (bank.bound_examples() != q) bank.bind_examples(q);
  }

  Rng perm_rng(cfg.seed,
               mix_stream(kPermutationStream, static_cast<std::uint64_t>(epoch)));
  const auto order = shuffled_indices(q, perm_rng);

  std::vector<std::vector<std::uint64_t>> worker_events(
      static_cast<std::size_t>(workers),
      std::vector<std::uint64_t>(static_cast<std::size_t>(m), 0));

  EpochReport report;
  report.epoch = epoch;
  report.feedback_events.assign(static_cast<std::size_t>(m), 0);

  const auto start = std::chrono::steady_clock::now();
  {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        Rng rng(cfg.seed, mix_stream(kWorkerStream,
                                     static_cast<std::uint64_t>(epoch),
                                     static_cast<std::uint64_t>(w)));
        auto& events = worker_events[static_cast<std::size_t>(w)];
        // Round-robin clause ownership across (class, clause) pairs.
        for (std::int64_t g = w; g < total_clauses; g += workers) {
          const int c = static_cast<int>(g / n);
          const int j = static_cast<int>(g % n);
          const auto offset = static_cast<std::int64_t>(
              clause_offset(static_cast<std::uint64_t>(g), q));
          events[static_cast<std::size_t>(c)] += update_clause(
              tm.banks[static_cast<std::size_t>(c)], j, pool, c, order, offset,
              q, cfg.margin, cfg.specificity, cfg.boost_true_positive, rng);
        }
      });
    }
    for (auto& thread : threads) thread.join();  // epoch-end barrier
  }
  const auto stop = std::chrono::steady_clock::now();
  report.seconds = std::chrono::duration<double>(stop - start).count();
  if (report.seconds <= 0.0) report.seconds = 1e-9;

  for (const auto& events : worker_events) {
    for (std::size_t c = 0; c < events.size(); ++c) {
      report.feedback_events[c] += events[c];
    }
  }
  return report;
}

int classify(const MultiClassTM& tm, std::span<const std::uint64_t> literals) {
  if (tm.banks.size() == 1) {
    // Binary machine folded into one bank: unit step on the vote sum.
    return vote_sum(tm.banks.front(), literals, EvalMode::Predict) >= 0 ? 1 : 0;
  }
  int best_class = 0;
  int best_sum = vote_sum(tm.banks.front(), literals, EvalMode::Predict);
  for (int c = 1; c < tm.num_banks(); ++c) {
    const int sum =
        vote_sum(tm.banks[static_cast<std::size_t>(c)], literals, EvalMode::Predict);
    if (sum > best_sum) {
      best_sum = sum;
      best_class = c;
    }
  }
  return best_class;
}

std::vector<std::int32_t> export_vote_sums(
    const MultiClassTM& tm, std::span<const std::uint64_t> literals) {
  std::vector<std::int32_t> sums;
  sums.reserve(tm.banks.size());
  for (const auto& bank : tm.banks) {
    sums.push_back(vote_sum(bank, literals, EvalMode::Predict));
  }
  return sums;
}

std::vector<std::int32_t> predict_all(const MultiClassTM& tm,
                                      const ExamplePool& pool) {
  std::vector<std::int32_t> predictions(static_cast<std::size_t>(pool.size()));
  for (int i = 0; i < pool.size(); ++i) {
    predictions[static_cast<std::size_t>(i)] = classify(tm, pool.literals(i));
  }
  return predictions;
}

double evaluate_accuracy(const MultiClassTM& tm, const ExamplePool& pool) {
  int correct = 0;
  for (int i = 0; i < pool.size(); ++i) {
    if (classify(tm, pool.literals(i)) == pool.label(i)) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(pool.size());
}

}  // namespace tsetlin
