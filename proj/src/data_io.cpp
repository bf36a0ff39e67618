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

#include "tsetlin/data_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "tsetlin/rng.hpp"

namespace tsetlin {

namespace {

[[noreturn]] void parse_error(const std::filesystem::path& path, int line,
                              const std::string& what) {
  throw std::runtime_error(path.string() + ":" + std::to_string(line) + ": " +
                           what);
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

}  // namespace

Dataset load_dense_binary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open dataset file: " + path.string());
  }

  Dataset data;
  std::string line;
  int line_number = 0;
  int columns = -1;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    for (std::string token; tokens >> token;) fields.push_back(token);
    if (fields.empty()) continue;

    if (columns < 0) {
      columns = static_cast<int>(fields.size());
      if (columns < 2) {
        parse_error(path, line_number,
                    "expected at least one feature and a label");
      }
      data.feature_count = columns - 1;
    } else if (static_cast<int>(fields.size()) != columns) {
      parse_error(path, line_number,
                  "row has " + std::to_string(fields.size()) +
                      " fields, expected " + std::to_string(columns));
    }

    for (int c = 0; c < columns - 1; ++c) {
      const auto& token = fields[static_cast<std::size_t>(c)];
      if (token == "0") {
        data.x.push_back(0);
      } else if (token == "1") {
        data.x.push_back(1);
      } else {
        parse_error(path, line_number,
                    "feature token '" + token + "' is not 0/1");
      }
    }
    const auto& label_token = fields.back();
    try {
      std::size_t used = 0;
      const int label = std::stoi(label_token, &used);
      if (used != label_token.size() || label < 0) throw std::invalid_argument("");
      data.y.push_back(label);
    } catch (const std::exception&) {
      parse_error(path, line_number,
                  "label token '" + label_token + "' is not a non-negative integer");
    }
  }
  if (data.y.empty()) {
    throw std::runtime_error("empty dataset: " + path.string());
  }
  return data;
}

void save_dense_binary(const std::filesystem::path& path, const Dataset& data) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write dataset file: " + path.string());
  }
  for (int r = 0; r < data.rows(); ++r) {
    const auto row = data.row(r);
    for (const auto bit : row) out << static_cast<int>(bit) << ' ';
    out << data.y[static_cast<std::size_t>(r)] << '\n';
  }
}

RawDataset load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open CSV file: " + path.string());
  }

  RawDataset data;
  std::string line;
  int line_number = 0;
  if (!std::getline(in, line)) {
    throw std::runtime_error("empty CSV file: " + path.string());
  }
  ++line_number;
  {
    std::istringstream header(line);
    for (std::string cell; std::getline(header, cell, ',');) {
      data.column_names.push_back(trim(cell));
    }
  }
  data.column_count = static_cast<int>(data.column_names.size());
  if (data.column_count < 2) {
    parse_error(path, line_number, "expected at least two columns");
  }

  while (std::getline(in, line)) {
    ++line_number;
    if (trim(line).empty()) continue;
    std::istringstream row(line);
    int fields = 0;
    for (std::string cell; std::getline(row, cell, ','); ++fields) {
      const std::string value = trim(cell);
      char* end = nullptr;
      const double parsed = std::strtod(value.c_str(), &end);
      if (value.empty() || end != value.c_str() + value.size()) {
        parse_error(path, line_number,
                    "column " + std::to_string(fields + 1) + ": cell '" +
                        value + "' is not numeric");
      }
      data.values.push_back(parsed);
    }
    if (fields != data.column_count) {
      parse_error(path, line_number,
                  "row has " + std::to_string(fields) + " cells, expected " +
                      std::to_string(data.column_count));
    }
  }
  if (data.rows() == 0) {
    throw std::runtime_error("CSV has no data rows: " + path.string());
  }
  return data;
}

int BinarizerSpec::output_width() const {
  int width = 0;
  for (const auto& column : columns) width += column.width;
  return width;
}

BinarizerSpec fit_binarizer(const RawDataset& data, int bits_per_feature,
                            std::span<const std::int32_t> rows) {
  if (bits_per_feature < 1) {
    throw std::invalid_argument("bits per feature must be >= 1");
  }
  std::vector<std::int32_t> all_rows;
  if (rows.empty()) {
    all_rows.resize(static_cast<std::size_t>(data.rows()));
    for (int r = 0; r < data.rows(); ++r) all_rows[static_cast<std::size_t>(r)] = r;
    rows = all_rows;
  }

  BinarizerSpec spec;
  spec.columns.resize(static_cast<std::size_t>(data.feature_columns()));
  std::vector<double> sorted;
  sorted.reserve(rows.size());
  for (int c = 0; c < data.feature_columns(); ++c) {
    auto& column = spec.columns[static_cast<std::size_t>(c)];
    sorted.clear();
    bool binary = true;
    for (const auto r : rows) {
      const double v = data.value(r, c);
      if (v != 0.0 && v != 1.0) binary = false;
      sorted.push_back(v);
    }
    if (binary) {
      column.binary = true;
      column.width = 1;
      continue;
    }

    column.binary = false;
    column.width = bits_per_feature;
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() == sorted.back()) {
      std::cerr << "warning: column " << data.column_names[static_cast<std::size_t>(c)]
                << " is constant; encoding as all-zeros\n";
      continue;
    }
    const auto count = sorted.size();
    for (int b = 1; b <= bits_per_feature; ++b) {
      const double fraction =
          static_cast<double>(b) / static_cast<double>(bits_per_feature + 1);
      const auto idx = static_cast<std::size_t>(
          std::floor(fraction * static_cast<double>(count - 1)));
      const double threshold = sorted[idx];
      if (column.thresholds.empty() || threshold > column.thresholds.back()) {
        column.thresholds.push_back(threshold);
      }
    }
  }
  return spec;
}

std::vector<std::uint8_t> apply_binarizer(const BinarizerSpec& spec,
                                          const RawDataset& data,
                                          std::span<const std::int32_t> rows) {
  if (static_cast<int>(spec.columns.size()) != data.feature_columns()) {
    throw std::invalid_argument("binarizer/data column count mismatch");
  }
  std::vector<std::int32_t> all_rows;
  if (rows.empty()) {
    all_rows.resize(static_cast<std::size_t>(data.rows()));
    for (int r = 0; r < data.rows(); ++r) all_rows[static_cast<std::size_t>(r)] = r;
    rows = all_rows;
  }

  const int width = spec.output_width();
  std::vector<std::uint8_t> bits;
  bits.reserve(rows.size() * static_cast<std::size_t>(width));
  for (const auto r : rows) {
    for (std::size_t c = 0; c < spec.columns.size(); ++c) {
      const auto& column = spec.columns[c];
      const double v = data.value(r, static_cast<int>(c));
      if (column.binary) {
        bits.push_back(v != 0.0 ? 1 : 0);
        continue;
      }
      for (const auto threshold : column.thresholds) {
        bits.push_back(v > threshold ? 1 : 0);
      }
      for (int pad = static_cast<int>(column.thresholds.size());
           pad < column.width; ++pad) {
        bits.push_back(0);
      }
    }
  }
  return bits;
}

void save_binarizer(std::ostream& out, const BinarizerSpec& spec) {
  out << "tmbinarizer v1\n";
  out << "columns " << spec.columns.size() << "\n";
  for (const auto& column : spec.columns) {
    if (column.binary) {
      out << "binary\n";
      continue;
    }
    out << "continuous " << column.width << " " << column.thresholds.size();
    for (const auto threshold : column.thresholds) {
      out << " " << format_double(threshold);
    }
    out << "\n";
  }
}

BinarizerSpec load_binarizer(std::istream& in) {
  std::string magic, version;
  in >> magic >> version;
  if (!in || magic != "tmbinarizer" || version != "v1") {
    throw std::runtime_error("not a tmbinarizer v1 record");
  }
  std::string key;
  std::size_t count = 0;
  in >> key >> count;
  if (!in || key != "columns") {
    throw std::runtime_error("binarizer record: missing column count");
  }
  BinarizerSpec spec;
  spec.columns.resize(count);
  for (auto& column : spec.columns) {
    std::string kind;
    in >> kind;
    if (kind == "binary") {
      column.binary = true;
      column.width = 1;
    } else if (kind == "continuous") {
      std::size_t thresholds = 0;
      in >> column.width >> thresholds;
      column.thresholds.resize(thresholds);
      for (auto& threshold : column.thresholds) in >> threshold;
    } else {
      throw std::runtime_error("binarizer record: unknown column kind '" +
                               kind + "'");
    }
    if (!in) throw std::runtime_error("binarizer record: truncated");
  }
  return spec;
}

SynthSplit synth_xor(int train_rows, int test_rows, double noise_rate,
                     std::uint64_t seed) {
  if (noise_rate < 0.0 || noise_rate >= 0.5) {
    throw std::invalid_argument("noise rate must lie in [0, 0.5)");
  }
  Rng rng(seed, 0xD47A);
  SynthSplit split;
  const auto fill = [&](Dataset& data, int rows, bool with_noise) {
    data.feature_count = 2;
    data.x.reserve(static_cast<std::size_t>(rows) * 2);
    data.y.reserve(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) {
      const auto x1 = static_cast<std::uint8_t>(rng.below(2));
      const auto x2 = static_cast<std::uint8_t>(rng.below(2));
      data.x.push_back(x1);
      data.x.push_back(x2);
      std::int32_t y = x1 ^ x2;
      if (with_noise && noise_rate > 0.0 && rng.uniform() < noise_rate) y = 1 - y;
      data.y.push_back(y);
    }
  };
  fill(split.train, train_rows, true);
  fill(split.test, test_rows, false);
  return split;
}

SynthSplit synth_patterns(int train_rows, int test_rows, int num_classes,
                          int zone_width, double noise_rate,
                          std::uint64_t seed) {
  if (num_classes < 2) throw std::invalid_argument("need at least two classes");
  if (zone_width < 2) throw std::invalid_argument("zone width must be >= 2");
  if (noise_rate < 0.0 || noise_rate >= 0.5) {
    throw std::invalid_argument("noise rate must lie in [0, 0.5)");
  }

  Rng rng(seed, 0xFA77);
  const int features = num_classes * zone_width;
  std::vector<std::uint8_t> templates(
      static_cast<std::size_t>(features));
  for (auto& bit : templates) bit = static_cast<std::uint8_t>(rng.below(2));

  const auto fill = [&](Dataset& data, int rows, bool with_noise) {
    data.feature_count = features;
    data.x.reserve(static_cast<std::size_t>(rows) *
                   static_cast<std::size_t>(features));
    data.y.reserve(static_cast<std::size_t>(rows));
    std::vector<std::uint8_t> row(static_cast<std::size_t>(features));
    for (int r = 0; r < rows; ++r) {
      const int true_class = static_cast<int>(
          rng.below(static_cast<std::uint32_t>(num_classes)));
      for (int d = 0; d < num_classes; ++d) {
        const int base = d * zone_width;
        if (d == true_class) {
          for (int z = 0; z < zone_width; ++z) {
            row[static_cast<std::size_t>(base + z)] =
                templates[static_cast<std::size_t>(base + z)];
          }
          continue;
        }
        bool matches = true;
        for (int z = 0; z < zone_width; ++z) {
          const auto bit = static_cast<std::uint8_t>(rng.below(2));
          row[static_cast<std::size_t>(base + z)] = bit;
          if (bit != templates[static_cast<std::size_t>(base + z)]) {
            matches = false;
          }
        }
        if (matches) {
          // Break the accidental match so only the true class's zone fits.
          const int z = static_cast<int>(
              rng.below(static_cast<std::uint32_t>(zone_width)));
          row[static_cast<std::size_t>(base + z)] ^= 1;
        }
      }
      data.x.insert(data.x.end(), row.begin(), row.end());
      std::int32_t label = true_class;
      if (with_noise && noise_rate > 0.0 && rng.uniform() < noise_rate) {
        int other = static_cast<int>(
            rng.below(static_cast<std::uint32_t>(num_classes - 1)));
        if (other >= label) ++other;
        label = other;
      }
      data.y.push_back(label);
    }
  };
  SynthSplit split;
  fill(split.train, train_rows, true);
  fill(split.test, test_rows, false);
  return split;
}

SynthSplit synth_staircase(int train_rows, int test_rows, int feature_count,
                           std::uint64_t seed) {
  if (feature_count < 1) throw std::invalid_argument("need at least one feature");
  Rng rng(seed, 0x57A1);
  SynthSplit split;
  const auto fill = [&](Dataset& data, int rows) {
    data.feature_count = feature_count;
    data.x.reserve(static_cast<std::size_t>(rows) *
                   static_cast<std::size_t>(feature_count));
    data.y.reserve(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) {
      std::int32_t ones = 0;
      for (int f = 0; f < feature_count; ++f) {
        const auto bit = static_cast<std::uint8_t>(rng.below(2));
        data.x.push_back(bit);
        ones += bit;
      }
      data.y.push_back(ones);
    }
  };
  fill(split.train, train_rows);
  fill(split.test, test_rows);
  return split;
}

}  // namespace tsetlin
