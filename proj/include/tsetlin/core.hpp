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
#include <stdexcept>
#include <vector>

namespace tsetlin {

/// Decision of a single Tsetlin automaton for its literal.
enum class Action : std::uint8_t { Exclude, Include };

/// Reinforcement delivered to a single automaton.
enum class Reinforcement : std::uint8_t { Inaction, Reward, Penalty };

/// Clause evaluation convention for clauses with no included literal:
/// they output 1 while training (so fresh clauses receive feedback) and 0
/// during prediction (so vacuous clauses cast no vote).
enum class EvalMode : std::uint8_t { Train, Predict };

/// Automaton state: a confidence counter in [1, 2N]. The upper half selects
/// Include, the lower half Exclude. Rewards deepen the current action,
/// penalties move toward the opposite one; both ends saturate.
using StateCounter = std::uint16_t;

inline Action ta_action(StateCounter counter, int state_depth) {
  return counter > state_depth ? Action::Include : Action::Exclude;
}

inline StateCounter apply_transition(StateCounter counter, Reinforcement event,
                                     int state_depth) {
  const int max_state = 2 * state_depth;
  int c = counter;
  switch (event) {
    case Reinforcement::Inaction:
      break;
    case Reinforcement::Reward:
      // Deepen the current action.
      c = (c > state_depth) ? c + 1 : c - 1;
      break;
    case Reinforcement::Penalty:
      // Move toward the opposite action.
      c = (c > state_depth) ? c - 1 : c + 1;
      break;
  }
  if (c < 1) c = 1;
  if (c > max_state) c = max_state;
  return static_cast<StateCounter>(c);
}

/// Value of literal k for input x: features first, then their negations.
/// k in [0, 2o): k < o reads x[k], otherwise 1 - x[k - o].
int literal_value(std::span<const std::uint8_t> x, int k);

/// Number of 64-bit words needed to hold the 2o literal bits of one example.
constexpr int literal_words(int feature_count) {
  return (2 * feature_count + 63) / 64;
}

/// Packs the 2o literal values of a feature row into words, low bit first.
/// Unused tail bits are zero.
void pack_literals(std::span<const std::uint8_t> x,
                   std::span<std::uint64_t> words);

inline bool literal_bit(std::span<const std::uint64_t> words, int k) {
  return (words[static_cast<std::size_t>(k >> 6)] >> (k & 63)) & 1u;
}

struct TMConfig {
  int clauses = 100;               // n per class, even
  int margin = 15;                 // T
  double specificity = 3.0;        // s
  int state_depth = 128;           // N
  bool boost_true_positive = false;
  int epochs = 100;
  int workers = 0;                 // 0 = hardware concurrency
  std::uint64_t seed = 42;

  /// Throws std::invalid_argument on any out-of-range hyperparameter.
  void validate() const;
};

/// Resolved worker count: explicit value, or hardware concurrency when 0.
int effective_workers(const TMConfig& config);

enum class PolarityScheme : std::uint8_t { Alternating, AllPositive };

/// One class's team of clauses, stored column-contiguous for evaluation
/// speed: automata counters, the derived include masks and include counts,
/// and the per-example previous-output bitmaps used by the voting tallies.
///
/// Under the alternating scheme clause j (0-based) has positive polarity iff
/// j is even, i.e. 1-based odd clauses vote for the class.
class ClassBank {
 public:
  ClassBank(int feature_count, int clause_count, int state_depth,
            PolarityScheme scheme = PolarityScheme::Alternating);

  int feature_count() const { return feature_count_; }
  int literal_count() const { return literals_; }
  int clause_count() const { return clause_count_; }
  int state_depth() const { return state_depth_; }
  int words_per_clause() const { return words_per_clause_; }
  PolarityScheme scheme() const { return scheme_; }

  bool positive(int j) const {
    return scheme_ == PolarityScheme::AllPositive || (j % 2) == 0;
  }

  StateCounter counter(int j, int k) const { return counters_[index(j, k)]; }
  Action action(int j, int k) const {
    return ta_action(counter(j, k), state_depth_);
  }
  /// Sets one automaton counter and keeps the include mask consistent.
  void set_counter(int j, int k, StateCounter value);

  /// Applies a reinforcement to automaton (j, k), maintaining the mask.
  void reinforce(int j, int k, Reinforcement event) {
    const std::size_t idx = index(j, k);
    const StateCounter before = counters_[idx];
    const StateCounter after = apply_transition(before, event, state_depth_);
    if (after == before) return;
    counters_[idx] = after;
    const bool was_included = before > state_depth_;
    const bool included = after > state_depth_;
    if (was_included == included) return;
    include_masks_[mask_word(j, k)] ^= 1ULL << (k & 63);
    include_counts_[static_cast<std::size_t>(j)] += included ? 1 : -1;
  }

  int include_count(int j) const {
    return include_counts_[static_cast<std::size_t>(j)];
  }
  std::span<const std::uint64_t> include_mask(int j) const {
    return {include_masks_.data() + static_cast<std::size_t>(j) *
                                        static_cast<std::size_t>(words_per_clause_),
            static_cast<std::size_t>(words_per_clause_)};
  }

  // Previous clause output, one bit per pool example per clause.
  void bind_examples(int example_count);
  int bound_examples() const { return bound_examples_; }
  bool prev_output(int j, int i) const {
    return (prev_outputs_[output_word(j, i)] >> (i & 63)) & 1u;
  }
  void set_prev_output(int j, int i, bool bit) {
    const std::uint64_t mask = 1ULL << (i & 63);
    if (bit) {
      prev_outputs_[output_word(j, i)] |= mask;
    } else {
      prev_outputs_[output_word(j, i)] &= ~mask;
    }
  }

  std::span<const StateCounter> counters() const { return counters_; }
  std::span<StateCounter> mutable_counters() { return counters_; }
  /// Recomputes masks and include counts from the raw counters (model load).
  void rebuild_masks();

 private:
  std::size_t index(int j, int k) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(literals_) +
           static_cast<std::size_t>(k);
  }
  std::size_t mask_word(int j, int k) const {
    return static_cast<std::size_t>(j) *
               static_cast<std::size_t>(words_per_clause_) +
           static_cast<std::size_t>(k >> 6);
  }
  std::size_t output_word(int j, int i) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(output_words_) +
           static_cast<std::size_t>(i >> 6);
  }

  int feature_count_;
  int literals_;
  int clause_count_;
  int state_depth_;
  int words_per_clause_;
  PolarityScheme scheme_;
  int bound_examples_ = 0;
  int output_words_ = 0;

  std::vector<StateCounter> counters_;        // n x 2o
  std::vector<std::uint64_t> include_masks_;  // n x words_per_clause
  std::vector<std::int32_t> include_counts_;  // n
  std::vector<std::uint64_t> prev_outputs_;   // n x ceil(q / 64)
};

/// Conjunction of the clause's included literals over a packed literal row.
/// Clauses with an empty include set follow the EvalMode convention above.
inline int evaluate_clause(const ClassBank& bank, int j,
                           std::span<const std::uint64_t> literals,
                           EvalMode mode) {
  if (bank.include_count(j) == 0) {
    return mode == EvalMode::Train ? 1 : 0;
  }
  const auto mask = bank.include_mask(j);
  for (std::size_t w = 0; w < mask.size(); ++w) {
    if ((mask[w] & literals[w]) != mask[w]) return 0;
  }
  return 1;
}

}  // namespace tsetlin
