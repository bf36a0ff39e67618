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

#include <iosfwd>
#include <string>
#include <vector>

#include "tsetlin/data_io.hpp"
#include "tsetlin/trainer.hpp"

namespace tsetlin {

struct BenchRecord {
  std::string mode;  // "seq" or "par"
  int workers = 1;
  int clauses = 0;
  int epoch = 0;       // measured epoch index (warm-up excluded)
  double seconds = 0;  // this epoch only; loading/serialization excluded
  std::string metric_name;
  double metric_value = 0;
};

struct BenchOptions {
  std::vector<int> clause_counts;
  std::vector<std::string> modes = {"seq"};
  int warmup_epochs = 1;
  int measured_epochs = 3;
  int workers = 0;  // 0 = hardware concurrency
  bool regression = false;
};

/// Trains one model per (mode, clause count) with identical seeds and records
/// per-epoch wall time (epochs only) and the test metric after each measured
/// epoch.
std::vector<BenchRecord> bench_sweep(const Dataset& train, const Dataset& test,
                                     const TMConfig& base,
                                     const BenchOptions& options);

/// Columns: mode,workers,clauses,epoch,seconds,metric_name,metric_value
void write_bench_csv(std::ostream& out, std::span<const BenchRecord> records);

double median_epoch_seconds(std::span<const BenchRecord> records,
                            const std::string& mode, int clauses);

}  // namespace tsetlin
