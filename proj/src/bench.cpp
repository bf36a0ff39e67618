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

#include "tsetlin/bench.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "tsetlin/regression.hpp"

namespace tsetlin {

namespace {

int max_label(const Dataset& data) {
  std::int32_t highest = 0;
  for (const auto label : data.y) highest = std::max(highest, label);
  return highest;
}

std::string format_csv_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.9g", v);
  return buffer;
}

}  // namespace

std::vector<BenchRecord> bench_sweep(const Dataset& train, const Dataset& test,
                                     const TMConfig& base,
                                     const BenchOptions& options) {
  if (options.clause_counts.empty()) {
    throw std::invalid_argument("bench needs at least one clause count");
  }
  for (const auto& mode : options.modes) {
    if (mode != "seq" && mode != "par") {
      throw std::invalid_argument("bench mode must be seq or par");
    }
  }

  TMConfig probe = base;
  probe.workers = options.workers;
  const int workers = effective_workers(probe);

  std::vector<BenchRecord> records;
  for (const auto& mode : options.modes) {
    for (const int clauses : options.clause_counts) {
      TMConfig cfg = base;
      cfg.clauses = clauses;
      cfg.validate();

      if (options.regression) {
        std::int32_t lo = train.y.front(), hi = train.y.front();
        for (const auto y : train.y) {
          lo = std::min(lo, y);
          hi = std::max(hi, y);
        }
        RegressionHead head(cfg, train.feature_count, lo, hi);
        // Pool labels become scaled targets.
        std::vector<std::int32_t> scaled(train.y.size());
        for (std::size_t i = 0; i < train.y.size(); ++i) {
          scaled[i] = scaled_target(head, train.y[i]);
        }
        ExamplePool scaled_pool(train.feature_count, train.x, scaled, 1);
        ExamplePool test_pool(test.feature_count, test.x, test.y, 1);

        for (int e = 0; e < options.warmup_epochs + options.measured_epochs; ++e) {
          const EpochReport report =
              mode == "seq"
                  ? train_epoch_regress_sequential(head, scaled_pool, e)
                  : train_epoch_regress_parallel(head, scaled_pool, workers, e);
          if (e < options.warmup_epochs) continue;
          double total = 0.0;
          for (int i = 0; i < test_pool.size(); ++i) {
            total += std::abs(predict_regress(head, test_pool.literals(i)) -
                              static_cast<double>(test_pool.label(i)));
          }
          records.push_back({mode, mode == "seq" ? 1 : workers, clauses,
                             e - options.warmup_epochs, report.seconds, "mae",
                             total / test_pool.size()});
        }
        continue;
      }

      const int classes = std::max(2, std::max(max_label(train), max_label(test)) + 1);
      MultiClassTM tm(cfg, train.feature_count, classes);
      ExamplePool train_pool(train.feature_count, train.x, train.y, classes);
      ExamplePool test_pool(test.feature_count, test.x, test.y, classes);

      for (int e = 0; e < options.warmup_epochs + options.measured_epochs; ++e) {
        const EpochReport report =
            mode == "seq" ? train_epoch_sequential(tm, train_pool, e)
                          : train_epoch_parallel(tm, train_pool, workers, e);
        if (e < options.warmup_epochs) continue;
        records.push_back({mode, mode == "seq" ? 1 : workers, clauses,
                           e - options.warmup_epochs, report.seconds,
                           "accuracy", evaluate_accuracy(tm, test_pool)});
      }
    }
  }
  return records;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << "mode,workers,clauses,epoch,seconds,metric_name,metric_value\n";
  for (const auto& r : records) {
    out << r.mode << ',' << r.workers << ',' << r.clauses << ',' << r.epoch
        << ',' << format_csv_double(r.seconds) << ',' << r.metric_name << ','
        << format_csv_double(r.metric_value) << '\n';
  }
}

double median_epoch_seconds(std::span<const BenchRecord> records,
                            const std::string& mode, int clauses) {
  std::vector<double> seconds;
  for (const auto& r : records) {
    if (r.mode == mode && r.clauses == clauses) seconds.push_back(r.seconds);
  }
  if (seconds.empty()) {
    throw std::invalid_argument("no bench records for requested cell");
  }
  std::sort(seconds.begin(), seconds.end());
  const std::size_t mid = seconds.size() / 2;
  if (seconds.size() % 2 == 1) return seconds[mid];
  return 0.5 * (seconds[mid - 1] + seconds[mid]);
}

}  // namespace tsetlin
