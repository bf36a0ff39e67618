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

#include "tsetlin/core.hpp"

#include <string>
#include <thread>

namespace tsetlin {

int literal_value(std::span<const std::uint8_t> x, int k) {
  const int o = static_cast<int>(x.size());
  if (k < 0 || k >= 2 * o) {
    throw std::out_of_range("literal index " + std::to_string(k) +
                            " outside [0, " + std::to_string(2 * o) + ")");
  }
  return k < o ? x[static_cast<std::size_t>(k)]
               : 1 - x[static_cast<std::size_t>(k - o)];
}

void pack_literals(std::span<const std::uint8_t> x,
                   std::span<std::uint64_t> words) {
  const int o = static_cast<int>(x.size());
  for (auto& w : words) w = 0;
  for (int f = 0; f < o; ++f) {
    if (x[static_cast<std::size_t>(f)]) {
      words[static_cast<std::size_t>(f >> 6)] |= 1ULL << (f & 63);
    } else {
      const int k = o + f;
      words[static_cast<std::size_t>(k >> 6)] |= 1ULL << (k & 63);
    }
  }
}

void TMConfig::validate() const {
  if (clauses < 2 || clauses % 2 != 0) {
    throw std::invalid_argument("clauses must be even and >= 2, got " +
                                std::to_string(clauses));
  }
  if (margin < 1) {
    throw std::invalid_argument("margin must be >= 1, got " +
                                std::to_string(margin));
  }
  if (!(specificity >= 1.0)) {
    throw std::invalid_argument("specificity must be >= 1, got " +
                                std::to_string(specificity));
  }
  if (state_depth < 1) {
    throw std::invalid_argument("state depth must be >= 1, got " +
                                std::to_string(state_depth));
  }
  if (state_depth > 16383) {
    throw std::invalid_argument("state depth too large for 16-bit counters");
  }
  if (epochs < 0) {
    throw std::invalid_argument("epochs must be >= 0");
  }
  if (workers < 0) {
    throw std::invalid_argument("workers must be >= 0 (0 = auto)");
  }
}

int effective_workers(const TMConfig& config) {
  if (config.workers > 0) return config.workers;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

ClassBank::ClassBank(int feature_count, int clause_count, int state_depth,
                     PolarityScheme scheme)
    : feature_count_(feature_count),
      literals_(2 * feature_count),
      clause_count_(clause_count),
      state_depth_(state_depth),
      words_per_clause_(literal_words(feature_count)),
      scheme_(scheme) {
  if (feature_count < 1) {
    throw std::invalid_argument("feature count must be >= 1");
  }
  if (clause_count < 0) {
    throw std::invalid_argument("clause count must be >= 0");
  }
  // All automata start on the Exclude boundary: clauses are empty at epoch 0
  // and one penalty away from including a literal.
  counters_.assign(static_cast<std::size_t>(clause_count_) *
                       static_cast<std::size_t>(literals_),
                   static_cast<StateCounter>(state_depth_));
  include_masks_.assign(static_cast<std::size_t>(clause_count_) *
                            static_cast<std::size_t>(words_per_clause_),
                        0);
  include_counts_.assign(static_cast<std::size_t>(clause_count_), 0);
}

void ClassBank::set_counter(int j, int k, StateCounter value) {
  const std::size_t idx = index(j, k);
  const bool was_included = counters_[idx] > state_depth_;
  counters_[idx] = value;
  const bool included = value > state_depth_;
  if (was_included == included) return;
  include_masks_[mask_word(j, k)] ^= 1ULL << (k & 63);
  include_counts_[static_cast<std::size_t>(j)] += included ? 1 : -1;
}

void ClassBank::bind_examples(int example_count) {
  if (example_count < 0) {
    throw std::invalid_argument("example count must be >= 0");
  }
  bound_examples_ = example_count;
  output_words_ = (example_count + 63) / 64;
  prev_outputs_.assign(static_cast<std::size_t>(clause_count_) *
                           static_cast<std::size_t>(output_words_),
                       0);
}

void ClassBank::rebuild_masks() {
  include_masks_.assign(include_masks_.size(), 0);
  include_counts_.assign(include_counts_.size(), 0);
  for (int j = 0; j < clause_count_; ++j) {
    for (int k = 0; k < literals_; ++k) {
      if (counters_[index(j, k)] > state_depth_) {
        include_masks_[mask_word(j, k)] |= 1ULL << (k & 63);
        ++include_counts_[static_cast<std::size_t>(j)];
      }
    }
  }
}

}  // namespace tsetlin
