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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace tsetlin {

/// Binarized dataset: q x o bit matrix plus one integer label (class index or
/// integer target) per row.
struct Dataset {
  int feature_count = 0;
  std::vector<std::uint8_t> x;  // rows * feature_count, values 0/1
  std::vector<std::int32_t> y;

  int rows() const { return static_cast<int>(y.size()); }
  std::span<const std::uint8_t> row(int r) const {
    return {x.data() + static_cast<std::size_t>(r) *
                           static_cast<std::size_t>(feature_count),
            static_cast<std::size_t>(feature_count)};
  }
};

/// Dense binary text format: one example per line, whitespace-separated
/// feature bits (strictly 0/1) with an integer label last.
Dataset load_dense_binary(const std::filesystem::path& path);
void save_dense_binary(const std::filesystem::path& path, const Dataset& data);

/// Raw tabular data: a header naming every column (label last) and numeric
/// cells. Continuous columns are binarized before training.
struct RawDataset {
  std::vector<std::string> column_names;
  int column_count = 0;
  std::vector<double> values;  // rows * column_count

  int rows() const {
    return column_count == 0 ? 0
                             : static_cast<int>(values.size()) / column_count;
  }
  double value(int r, int c) const {
    return values[static_cast<std::size_t>(r) *
                      static_cast<std::size_t>(column_count) +
                  static_cast<std::size_t>(c)];
  }
  int feature_columns() const { return column_count - 1; }
  double label(int r) const { return value(r, column_count - 1); }
};

RawDataset load_csv(const std::filesystem::path& path);

struct ColumnSpec {
  bool binary = false;
  int width = 1;                   // bits emitted for this column
  std::vector<double> thresholds;  // strictly ascending; empty for binary
};

/// Per-column quantile thresholds; value x encodes as the bits [x > t_b].
/// Columns whose fit values are all 0/1 pass through as a single bit.
struct BinarizerSpec {
  std::vector<ColumnSpec> columns;
  int output_width() const;
};

/// Fits thresholds at the B equally spaced quantiles of each continuous
/// column, using only the given rows (all rows when empty). Constant columns
/// get no thresholds and encode as all-zeros, with a warning on stderr.
BinarizerSpec fit_binarizer(const RawDataset& data, int bits_per_feature,
                            std::span<const std::int32_t> rows = {});

/// Encodes the feature columns of the selected rows (all rows when empty).
std::vector<std::uint8_t> apply_binarizer(const BinarizerSpec& spec,
                                          const RawDataset& data,
                                          std::span<const std::int32_t> rows = {});

void save_binarizer(std::ostream& out, const BinarizerSpec& spec);
BinarizerSpec load_binarizer(std::istream& in);

struct SynthSplit {
  Dataset train;
  Dataset test;
};

/// Two-feature XOR: labels y = x1 xor x2, flipped with probability
/// noise_rate on the train split only; the test split is always clean.
SynthSplit synth_xor(int train_rows, int test_rows, double noise_rate,
                     std::uint64_t seed);

/// Clause-pattern dataset: the features split into one zone per class and
/// each example matches exactly its own class's zone template, so the classes
/// are separable by one conjunctive pattern each. Train labels are flipped to
/// a random other class with probability noise_rate.
SynthSplit synth_patterns(int train_rows, int test_rows, int num_classes,
                          int zone_width, double noise_rate,
                          std::uint64_t seed);

/// Staircase regression: the target is the number of set bits in the input.
SynthSplit synth_staircase(int train_rows, int test_rows, int feature_count,
                           std::uint64_t seed);

}  // namespace tsetlin
