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

#include "tsetlin/feedback.hpp"

#include <algorithm>
#include <cassert>

namespace tsetlin {

double clause_update_probability(int vote_sum, int y, int margin) {
  const int clipped = std::clamp(vote_sum, -margin, margin);
  const int error = y == 1 ? margin - clipped : margin + clipped;
  return static_cast<double>(error) / (2.0 * static_cast<double>(margin));
}

namespace detail {

void type_i_with_output(ClassBank& bank, int j,
                        std::span<const std::uint64_t> literals,
                        int clause_output, double s, bool boost_true_positive,
                        Rng& rng) {
  const int num_literals = bank.literal_count();
  const int depth = bank.state_depth();
  const double p_high = (s - 1.0) / s;
  const double p_low = 1.0 / s;

  if (clause_output == 1) {
    for (int k = 0; k < num_literals; ++k) {
      const bool lit = literal_bit(literals, k);
      const bool included = bank.counter(j, k) > depth;
      const double u = rng.uniform();
      if (lit) {
        if (included) {
          if (boost_true_positive || u < p_high) {
            bank.reinforce(j, k, Reinforcement::Reward);
          }
        } else if (u < p_high) {
          bank.reinforce(j, k, Reinforcement::Penalty);
        }
      } else {
        // An included false literal would have forced the output to 0.
        assert(!included);
        if (u < p_low) bank.reinforce(j, k, Reinforcement::Reward);
      }
    }
  } else {
    for (int k = 0; k < num_literals; ++k) {
      const bool included = bank.counter(j, k) > depth;
      const double u = rng.uniform();
      if (u < p_low) {
        bank.reinforce(j, k,
                       included ? Reinforcement::Penalty : Reinforcement::Reward);
      }
    }
  }
}

void type_ii_with_output(ClassBank& bank, int j,
                         std::span<const std::uint64_t> literals,
                         int clause_output) {
  if (clause_output != 1) return;
  const int num_literals = bank.literal_count();
  const int depth = bank.state_depth();
  for (int k = 0; k < num_literals; ++k) {
    if (!literal_bit(literals, k) && bank.counter(j, k) <= depth) {
      bank.reinforce(j, k, Reinforcement::Penalty);
    }
  }
}

}  // namespace detail

void type_i_feedback(ClassBank& bank, int j,
                     std::span<const std::uint64_t> literals, double s,
                     bool boost_true_positive, Rng& rng) {
  const int output = evaluate_clause(bank, j, literals, EvalMode::Train);
  detail::type_i_with_output(bank, j, literals, output, s, boost_true_positive,
                             rng);
}

void type_ii_feedback(ClassBank& bank, int j,
                      std::span<const std::uint64_t> literals) {
  const int output = evaluate_clause(bank, j, literals, EvalMode::Train);
  detail::type_ii_with_output(bank, j, literals, output);
}

}  // namespace tsetlin
