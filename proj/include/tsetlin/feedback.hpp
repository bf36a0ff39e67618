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

#include "tsetlin/core.hpp"
#include "tsetlin/rng.hpp"

namespace tsetlin {

/// Probability of updating a clause given the vote sum v for an example and
/// its binary target y: the sum is clipped to [-T, T], the remaining margin
/// error e is T - v for y=1 and T + v for y=0, and the result is e / 2T.
/// Reaches 0 when the vote sum already meets the margin, 1 when maximally
/// wrong.
double clause_update_probability(int vote_sum, int y, int margin);

/// Type I feedback: reinforces the clause toward patterns present in the
/// input. Per literal, with clause output c and literal value l:
///   c=1, l=1: Include rewarded w.p. (s-1)/s (1 when boosting true
///             positives), Exclude penalized w.p. (s-1)/s.
///   c=0 or l=0: Include penalized w.p. 1/s, Exclude rewarded w.p. 1/s.
/// All other mass is Inaction. One independent uniform draw per literal.
void type_i_feedback(ClassBank& bank, int j,
                     std::span<const std::uint64_t> literals, double s,
                     bool boost_true_positive, Rng& rng);

/// Type II feedback: when the clause output is 1, deterministically penalizes
/// every excluded automaton whose literal is 0, pushing discriminating
/// literals toward inclusion. Everything else is Inaction.
void type_ii_feedback(ClassBank& bank, int j,
                      std::span<const std::uint64_t> literals);

namespace detail {

// Hot-path variants with the clause output already computed.
void type_i_with_output(ClassBank& bank, int j,
                        std::span<const std::uint64_t> literals,
                        int clause_output, double s, bool boost_true_positive,
                        Rng& rng);
void type_ii_with_output(ClassBank& bank, int j,
                         std::span<const std::uint64_t> literals,
                         int clause_output);

}  // namespace detail

}  // namespace tsetlin
