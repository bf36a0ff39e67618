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

#include "tsetlin/pool.hpp"

#include <string>

namespace tsetlin {

ExamplePool::ExamplePool(int feature_count, std::span<const std::uint8_t> bits,
                         std::span<const std::int32_t> labels, int num_classes)
    : size_(static_cast<int>(labels.size())),
      feature_count_(feature_count),
      num_classes_(num_classes),
      words_per_example_(literal_words(feature_count)) {
  if (feature_count < 1) {
    throw std::invalid_argument("feature count must be >= 1");
  }
  if (num_classes < 1) {
    throw std::invalid_argument("class count must be >= 1");
  }
  if (labels.empty()) {
    throw std::invalid_argument("example pool must not be empty");
  }
  if (bits.size() != static_cast<std::size_t>(size_) *
                         static_cast<std::size_t>(feature_count_)) {
    throw std::invalid_argument("bit matrix size does not match labels");
  }
  for (std::size_t idx = 0; idx < bits.size(); ++idx) {
    if (bits[idx] > 1) {
      throw std::invalid_argument("inputs must be 0/1");
    }
  }
  if (num_classes_ > 1) {
    for (const auto label : labels) {
      if (label < 0 || label >= num_classes_) {
        throw std::invalid_argument("label " + std::to_string(label) +
                                    " outside [0, " +
                                    std::to_string(num_classes_) + ")");
      }
    }
  }

  literals_.assign(static_cast<std::size_t>(size_) *
                       static_cast<std::size_t>(words_per_example_),
                   0);
  for (int i = 0; i < size_; ++i) {
    pack_literals(bits.subspan(static_cast<std::size_t>(i) *
                                   static_cast<std::size_t>(feature_count_),
                               static_cast<std::size_t>(feature_count_)),
                  {literals_.data() + static_cast<std::size_t>(i) *
                                          static_cast<std::size_t>(words_per_example_),
                   static_cast<std::size_t>(words_per_example_)});
  }
  labels_.assign(labels.begin(), labels.end());
  tallies_ = std::make_unique<std::atomic<std::int32_t>[]>(
      static_cast<std::size_t>(size_) * static_cast<std::size_t>(num_classes_));
  reset_tallies();
}

void ExamplePool::reset_tallies() {
  const std::size_t count =
      static_cast<std::size_t>(size_) * static_cast<std::size_t>(num_classes_);
  for (std::size_t idx = 0; idx < count; ++idx) {
    tallies_[idx].store(0, std::memory_order_relaxed);
  }
}

int vote_sum(const ClassBank& bank, std::span<const std::uint64_t> literals,
             EvalMode mode) {
  int sum = 0;
  const int n = bank.clause_count();
  for (int j = 0; j < n; ++j) {
    const int output = evaluate_clause(bank, j, literals, mode);
    sum += bank.positive(j) ? output : -output;
  }
  return sum;
}

void record_output_and_tally(ExamplePool& pool, int i, int class_idx,
                             ClassBank& bank, int j, int output) {
  if (i < 0 || i >= pool.size() || class_idx < 0 ||
      class_idx >= pool.num_classes()) {
    throw std::out_of_range("record_output_and_tally: index out of range");
  }
  const bool previous = bank.prev_output(j, i);
  const bool current = output != 0;
  if (previous == current) return;
  std::int32_t delta = current ? 1 : -1;
  if (!bank.positive(j)) delta = -delta;
  pool.add_to_tally(i, class_idx, delta);
  bank.set_prev_output(j, i, current);
}

void refresh_tallies(ExamplePool& pool, std::span<ClassBank> banks) {
  const int q = pool.size();
  for (std::size_t c = 0; c < banks.size(); ++c) {
    ClassBank& bank = banks[c];
    if (bank.bound_examples() != q) bank.bind_examples(q);
    for (int i = 0; i < q; ++i) {
      const auto literals = pool.literals(i);
      int sum = 0;
      for (int j = 0; j < bank.clause_count(); ++j) {
        const int output = evaluate_clause(bank, j, literals, EvalMode::Train);
        sum += bank.positive(j) ? output : -output;
        bank.set_prev_output(j, i, output != 0);
      }
      pool.set_tally(i, static_cast<int>(c), sum);
    }
  }
}

}  // namespace tsetlin
