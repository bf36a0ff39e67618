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

#include <atomic>
#include <memory>

#include "tsetlin/core.hpp"

namespace tsetlin {

/// Immutable binarized examples plus one shared vote tally per
/// (example, class). The inputs and labels never change after construction;
/// tallies are mutated only through an indivisible add, so clause workers can
/// update them concurrently without locks.
class ExamplePool {
 public:
  /// bits is row-major q x o with values 0/1; labels hold a class index per
  /// example (or a scaled integer target when num_classes == 1).
  ExamplePool(int feature_count, std::span<const std::uint8_t> bits,
              std::span<const std::int32_t> labels, int num_classes);

  int size() const { return size_; }
  int feature_count() const { return feature_count_; }
  int num_classes() const { return num_classes_; }
  int words_per_example() const { return words_per_example_; }

  /// Packed literal row of example i: features then negations.
  std::span<const std::uint64_t> literals(int i) const {
    return {literals_.data() + static_cast<std::size_t>(i) *
                                   static_cast<std::size_t>(words_per_example_),
            static_cast<std::size_t>(words_per_example_)};
  }

  std::int32_t label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
  std::uint8_t feature(int i, int f) const {
    return static_cast<std::uint8_t>(literal_bit(literals(i), f));
  }

  std::int32_t tally(int i, int c) const {
    return tallies_[tally_index(i, c)].load(std::memory_order_relaxed);
  }
  void add_to_tally(int i, int c, std::int32_t delta) {
    tallies_[tally_index(i, c)].fetch_add(delta, std::memory_order_relaxed);
  }
  void set_tally(int i, int c, std::int32_t value) {
    tallies_[tally_index(i, c)].store(value, std::memory_order_relaxed);
  }
  void reset_tallies();

 private:
  std::size_t tally_index(int i, int c) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(num_classes_) +
           static_cast<std::size_t>(c);
  }

  int size_;
  int feature_count_;
  int num_classes_;
  int words_per_example_;
  std::vector<std::uint64_t> literals_;
  std::vector<std::int32_t> labels_;
  std::unique_ptr<std::atomic<std::int32_t>[]> tallies_;
};

/// Vote sum of a bank on one input: positive-polarity clause outputs minus
/// negative-polarity ones.
int vote_sum(const ClassBank& bank, std::span<const std::uint64_t> literals,
             EvalMode mode);

/// Publishes a freshly computed clause output into the shared tally: when it
/// differs from the stored previous output, the signed difference (negated
/// for negative-polarity clauses) is added indivisibly to the example's tally
/// and the stored bit is overwritten. Equal outputs touch nothing shared.
void record_output_and_tally(ExamplePool& pool, int i, int class_idx,
                             ClassBank& bank, int j, int output);

/// Recomputes every tally as the exact train-mode vote sum and rewrites all
/// previous-output bits. Requires exclusive access to the pool and banks.
void refresh_tallies(ExamplePool& pool, std::span<ClassBank> banks);

}  // namespace tsetlin
