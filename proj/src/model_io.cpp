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

#include "tsetlin/model_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tsetlin {

namespace {

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

void write_config(std::ostream& out, const TMConfig& cfg) {
  out << "clauses " << cfg.clauses << "\n";
  out << "margin " << cfg.margin << "\n";
  out << "specificity " << format_double(cfg.specificity) << "\n";
  out << "states " << cfg.state_depth << "\n";
  out << "boost " << (cfg.boost_true_positive ? 1 : 0) << "\n";
  out << "seed " << cfg.seed << "\n";
}

void write_bank(std::ostream& out, const ClassBank& bank, int index) {
  out << "bank " << index << "\n";
  const auto counters = bank.counters();
  const int literals = bank.literal_count();
  for (int j = 0; j < bank.clause_count(); ++j) {
    for (int k = 0; k < literals; ++k) {
      if (k > 0) out << ' ';
      out << counters[static_cast<std::size_t>(j) *
                          static_cast<std::size_t>(literals) +
                      static_cast<std::size_t>(k)];
    }
    out << "\n";
  }
}

[[noreturn]] void malformed(const std::string& what) {
  throw std::runtime_error("model parse: " + what);
}

void expect_key(std::istream& in, const std::string& key, std::string& value) {
  std::string k;
  if (!(in >> k >> value) || k != key) malformed("expected '" + key + "' field");
}

template <typename T>
T read_field(std::istream& in, const std::string& key) {
  std::string k;
  T value{};
  if (!(in >> k >> value) || k != key) malformed("expected '" + key + "' field");
  return value;
}

TMConfig read_config(std::istream& in) {
  TMConfig cfg;
  cfg.clauses = read_field<int>(in, "clauses");
  cfg.margin = read_field<int>(in, "margin");
  cfg.specificity = read_field<double>(in, "specificity");
  cfg.state_depth = read_field<int>(in, "states");
  cfg.boost_true_positive = read_field<int>(in, "boost") != 0;
  cfg.seed = read_field<std::uint64_t>(in, "seed");
  cfg.epochs = 0;
  cfg.workers = 0;
  return cfg;
}

void read_bank(std::istream& in, ClassBank& bank, int expected_index) {
  const int index = read_field<int>(in, "bank");
  if (index != expected_index) malformed("bank index out of order");
  auto counters = bank.mutable_counters();
  const std::size_t total = counters.size();
  for (std::size_t idx = 0; idx < total; ++idx) {
    int value = 0;
    if (!(in >> value)) malformed("truncated counter block");
    if (value < 1 || value > 2 * bank.state_depth()) {
      malformed("counter " + std::to_string(value) + " outside [1, 2N]");
    }
    counters[idx] = static_cast<StateCounter>(value);
  }
  bank.rebuild_masks();
}

}  // namespace

void save_model(std::ostream& out, const MultiClassTM& tm) {
  out << "tmmodel v1\n";
  out << "task classify\n";
  out << "features " << tm.feature_count() << "\n";
  out << "classes " << tm.num_banks() << "\n";
  write_config(out, tm.config);
  for (int c = 0; c < tm.num_banks(); ++c) {
    write_bank(out, tm.banks[static_cast<std::size_t>(c)], c);
  }
  out << "end\n";
}

void save_model(std::ostream& out, const RegressionHead& head) {
  out << "tmmodel v1\n";
  out << "task regress\n";
  out << "features " << head.bank.feature_count() << "\n";
  out << "range " << format_double(head.y_min) << " "
      << format_double(head.y_max) << "\n";
  write_config(out, head.config);
  write_bank(out, head.bank, 0);
  out << "end\n";
}

AnyModel load_model(std::istream& in) {
  std::string magic, version;
  if (!(in >> magic >> version) || magic != "tmmodel" || version != "v1") {
    malformed("not a tmmodel v1 file");
  }
  std::string task;
  expect_key(in, "task", task);

  if (task == "classify") {
    const int features = read_field<int>(in, "features");
    const int classes = read_field<int>(in, "classes");
    const TMConfig cfg = read_config(in);
    MultiClassTM tm(cfg, features, classes);
    for (int c = 0; c < classes; ++c) {
      read_bank(in, tm.banks[static_cast<std::size_t>(c)], c);
    }
    std::string tail;
    if (!(in >> tail) || tail != "end") malformed("missing end marker");
    return tm;
  }
  if (task == "regress") {
    const int features = read_field<int>(in, "features");
    std::string key;
    double y_min = 0.0, y_max = 0.0;
    if (!(in >> key >> y_min >> y_max) || key != "range") {
      malformed("expected 'range' field");
    }
    const TMConfig cfg = read_config(in);
    RegressionHead head(cfg, features, y_min, y_max);
    read_bank(in, head.bank, 0);
    std::string tail;
    if (!(in >> tail) || tail != "end") malformed("missing end marker");
    return head;
  }
  malformed("unknown task '" + task + "'");
}

void save_model_file(const std::filesystem::path& path, const MultiClassTM& tm) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write model file: " + path.string());
  save_model(out, tm);
}

void save_model_file(const std::filesystem::path& path,
                     const RegressionHead& head) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write model file: " + path.string());
  save_model(out, head);
}

AnyModel load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path.string());
  return load_model(in);
}

}  // namespace tsetlin
