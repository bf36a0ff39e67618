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

#include "tsetlin/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "tsetlin/bench.hpp"
#include "tsetlin/data_io.hpp"
#include "tsetlin/metrics.hpp"
#include "tsetlin/model_io.hpp"
#include "tsetlin/regression.hpp"
#include "tsetlin/trainer.hpp"

namespace tsetlin {

namespace {

struct MissingFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_file(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw MissingFileError("no such file: " + path.string());
  }
}

int resolve_workers(int flag_value) {
  if (const char* env = std::getenv("TM_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1) {
      return static_cast<int>(parsed);
    }
    std::cerr << "warning: ignoring invalid TM_THREADS value '" << env << "'\n";
  }
  return flag_value;
}

struct CliOptions {
  TMConfig config;
  std::string mode = "seq";
  std::string task = "classify";
  std::string data_path;
  std::string test_path;
  std::string synth_name;
  int synth_train = 1000;
  int synth_test = 200;
  int synth_features = 6;
  int synth_classes = 4;
  int synth_zone = 5;
  double noise = 0.0;
  int binarize_bits = 8;
  double train_fraction = 0.8;
  std::string out_path;
  std::string report_path;
  std::string binarizer_out;
  std::string binarizer_in;
  std::string model_path;
  bool per_epoch = false;

  // bench
  std::vector<int> bench_clauses;
  std::string bench_mode = "both";
  int bench_warmup = 1;
  int bench_epochs = 3;
};

struct LoadedTask {
  Dataset train;
  std::optional<Dataset> test;
  // CSV regression carries real-valued targets alongside the bit matrix.
  std::vector<double> train_targets;
  std::vector<double> test_targets;
  std::optional<BinarizerSpec> binarizer;
};

bool is_csv(const std::string& path) {
  return path.size() >= 4 && path.substr(path.size() - 4) == ".csv";
}

LoadedTask load_task(const CliOptions& opt) {
  LoadedTask loaded;
  if (!opt.synth_name.empty()) {
    SynthSplit split;
    if (opt.synth_name == "xor") {
      split = synth_xor(opt.synth_train, opt.synth_test, opt.noise,
                        opt.config.seed);
    } else if (opt.synth_name == "patterns") {
      split = synth_patterns(opt.synth_train, opt.synth_test, opt.synth_classes,
                             opt.synth_zone, opt.noise, opt.config.seed);
    } else if (opt.synth_name == "staircase") {
      split = synth_staircase(opt.synth_train, opt.synth_test,
                              opt.synth_features, opt.config.seed);
    } else {
      throw std::invalid_argument("unknown synthetic dataset '" +
                                  opt.synth_name + "'");
    }
    loaded.train = std::move(split.train);
    loaded.test = std::move(split.test);
  } else if (!opt.data_path.empty()) {
    require_file(opt.data_path);
    if (is_csv(opt.data_path)) {
      const RawDataset raw = load_csv(opt.data_path);
      const int rows = raw.rows();
      const int train_rows = std::max(
          1, std::min(rows - 1, static_cast<int>(std::lround(
                                    rows * opt.train_fraction))));
      std::vector<std::int32_t> train_idx, test_idx;
      for (int r = 0; r < rows; ++r) {
        (r < train_rows ? train_idx : test_idx).push_back(r);
      }
      const BinarizerSpec spec =
          fit_binarizer(raw, opt.binarize_bits, train_idx);
      loaded.binarizer = spec;
      loaded.train.feature_count = spec.output_width();
      loaded.train.x = apply_binarizer(spec, raw, train_idx);
      Dataset test;
      test.feature_count = spec.output_width();
      test.x = apply_binarizer(spec, raw, test_idx);
      for (const auto r : train_idx) {
        loaded.train_targets.push_back(raw.label(r));
      }
      for (const auto r : test_idx) {
        loaded.test_targets.push_back(raw.label(r));
      }
      for (const auto target : loaded.train_targets) {
        loaded.train.y.push_back(static_cast<std::int32_t>(std::lround(target)));
      }
      for (const auto target : loaded.test_targets) {
        test.y.push_back(static_cast<std::int32_t>(std::lround(target)));
      }
      if (!test.y.empty()) loaded.test = std::move(test);
    } else {
      loaded.train = load_dense_binary(opt.data_path);
      if (!opt.test_path.empty()) {
        require_file(opt.test_path);
        loaded.test = load_dense_binary(opt.test_path);
      }
    }
  } else {
    throw std::invalid_argument("pass --data FILE or --synth NAME");
  }
  if (loaded.train_targets.empty()) {
    loaded.train_targets.assign(loaded.train.y.begin(), loaded.train.y.end());
    if (loaded.test) {
      loaded.test_targets.assign(loaded.test->y.begin(), loaded.test->y.end());
    }
  }
  if (!opt.test_path.empty() && !opt.synth_name.empty()) {
    throw std::invalid_argument("--test cannot be combined with --synth");
  }
  return loaded;
}

void write_report_row(std::ostream& out, const std::string& mode, int workers,
                      int clauses, int epoch, double seconds,
                      const std::string& metric_name, double metric_value) {
  out << mode << ',' << workers << ',' << clauses << ',' << epoch << ','
      << seconds << ',' << metric_name << ',' << metric_value << '\n';
}

int do_train(const CliOptions& opt) {
  TMConfig cfg = opt.config;
  cfg.workers = resolve_workers(cfg.workers);
  cfg.validate();

  LoadedTask loaded = load_task(opt);
  const int workers = effective_workers(cfg);

  std::ofstream report;
  if (!opt.report_path.empty()) {
    report.open(opt.report_path);
    if (!report) {
      throw std::runtime_error("cannot write report: " + opt.report_path);
    }
    report << "mode,workers,clauses,epoch,seconds,metric_name,metric_value\n";
  }

  if (opt.task == "classify") {
    int classes = 2;
    for (const auto y : loaded.train.y) classes = std::max(classes, y + 1);
    if (loaded.test) {
      for (const auto y : loaded.test->y) classes = std::max(classes, y + 1);
    }
    MultiClassTM tm(cfg, loaded.train.feature_count, classes);
    ExamplePool train_pool(loaded.train.feature_count, loaded.train.x,
                           loaded.train.y, classes);
    std::optional<ExamplePool> test_pool;
    if (loaded.test) {
      test_pool.emplace(loaded.test->feature_count, loaded.test->x,
                        loaded.test->y, classes);
    }

    for (int e = 0; e < cfg.epochs; ++e) {
      const EpochReport r = opt.mode == "par"
                                ? train_epoch_parallel(tm, train_pool, workers, e)
                                : train_epoch_sequential(tm, train_pool, e);
      if (opt.per_epoch || report.is_open()) {
        const double train_acc = evaluate_accuracy(tm, train_pool);
        if (opt.per_epoch) {
          std::cout << "epoch " << e << " seconds " << r.seconds
                    << " train_accuracy " << train_acc << '\n';
        }
        if (report.is_open()) {
          write_report_row(report, opt.mode, opt.mode == "par" ? workers : 1,
                           cfg.clauses, e, r.seconds, "train_accuracy",
                           train_acc);
          if (test_pool) {
            write_report_row(report, opt.mode, opt.mode == "par" ? workers : 1,
                             cfg.clauses, e, r.seconds, "test_accuracy",
                             evaluate_accuracy(tm, *test_pool));
          }
        }
      }
    }

    std::cout << "train_accuracy " << evaluate_accuracy(tm, train_pool) << '\n';
    if (test_pool) {
      const auto predictions = predict_all(tm, *test_pool);
      const auto metrics =
          classification_metrics(predictions, loaded.test->y);
      std::cout << "test_accuracy " << metrics.accuracy << '\n';
      std::cout << "test_macro_f1 " << metrics.macro_f1 << '\n';
    }
    if (!opt.out_path.empty()) {
      save_model_file(opt.out_path, tm);
      std::cout << "model " << opt.out_path << '\n';
    }
  } else if (opt.task == "regress") {
    double lo = loaded.train_targets.front(), hi = loaded.train_targets.front();
    for (const auto y : loaded.train_targets) {
      lo = std::min(lo, y);
      hi = std::max(hi, y);
    }
    RegressionHead head(cfg, loaded.train.feature_count, lo, hi);
    std::vector<std::int32_t> scaled(loaded.train_targets.size());
    for (std::size_t i = 0; i < scaled.size(); ++i) {
      scaled[i] = scaled_target(head, loaded.train_targets[i]);
    }
    ExamplePool train_pool(loaded.train.feature_count, loaded.train.x, scaled, 1);
    std::optional<ExamplePool> test_pool;
    if (loaded.test) {
      std::vector<std::int32_t> zeros(loaded.test->y.size(), 0);
      test_pool.emplace(loaded.test->feature_count, loaded.test->x, zeros, 1);
    }
    const auto test_mae = [&]() {
      double total = 0.0;
      for (int i = 0; i < test_pool->size(); ++i) {
        total += std::abs(predict_regress(head, test_pool->literals(i)) -
                          loaded.test_targets[static_cast<std::size_t>(i)]);
      }
      return total / static_cast<double>(test_pool->size());
    };

    for (int e = 0; e < cfg.epochs; ++e) {
      const EpochReport r =
          opt.mode == "par"
              ? train_epoch_regress_parallel(head, train_pool, workers, e)
              : train_epoch_regress_sequential(head, train_pool, e);
      if (opt.per_epoch) {
        std::cout << "epoch " << e << " seconds " << r.seconds << '\n';
      }
      if (report.is_open() && test_pool) {
        write_report_row(report, opt.mode, opt.mode == "par" ? workers : 1,
                         cfg.clauses, e, r.seconds, "test_mae", test_mae());
      }
    }

    double train_total = 0.0;
    for (int i = 0; i < train_pool.size(); ++i) {
      train_total += std::abs(predict_regress(head, train_pool.literals(i)) -
                              loaded.train_targets[static_cast<std::size_t>(i)]);
    }
    std::cout << "train_mae " << train_total / train_pool.size() << '\n';
    if (test_pool) std::cout << "test_mae " << test_mae() << '\n';
    if (!opt.out_path.empty()) {
      save_model_file(opt.out_path, head);
      std::cout << "model " << opt.out_path << '\n';
    }
  } else {
    throw std::invalid_argument("task must be classify or regress");
  }

  if (!opt.binarizer_out.empty()) {
    if (!loaded.binarizer) {
      throw std::invalid_argument("--binarizer-out needs CSV input");
    }
    std::ofstream out(opt.binarizer_out);
    if (!out) {
      throw std::runtime_error("cannot write binarizer: " + opt.binarizer_out);
    }
    save_binarizer(out, *loaded.binarizer);
  }
  return 0;
}

int do_eval(const CliOptions& opt) {
  require_file(opt.model_path);
  AnyModel model = load_model_file(opt.model_path);
  require_file(opt.data_path);

  Dataset data;
  std::vector<double> targets;
  if (is_csv(opt.data_path)) {
    if (opt.binarizer_in.empty()) {
      throw std::invalid_argument("CSV eval needs --binarizer FILE");
    }
    require_file(opt.binarizer_in);
    std::ifstream in(opt.binarizer_in);
    const BinarizerSpec spec = load_binarizer(in);
    const RawDataset raw = load_csv(opt.data_path);
    data.feature_count = spec.output_width();
    data.x = apply_binarizer(spec, raw);
    for (int r = 0; r < raw.rows(); ++r) {
      targets.push_back(raw.label(r));
      data.y.push_back(static_cast<std::int32_t>(std::lround(raw.label(r))));
    }
  } else {
    data = load_dense_binary(opt.data_path);
    targets.assign(data.y.begin(), data.y.end());
  }

  if (std::holds_alternative<MultiClassTM>(model)) {
    const auto& tm = std::get<MultiClassTM>(model);
    ExamplePool pool(data.feature_count, data.x, data.y, tm.num_banks());
    const auto predictions = predict_all(tm, pool);
    const auto metrics = classification_metrics(predictions, data.y);
    std::cout << "accuracy " << metrics.accuracy << '\n';
    std::cout << "macro_f1 " << metrics.macro_f1 << '\n';
  } else {
    const auto& head = std::get<RegressionHead>(model);
    std::vector<std::int32_t> zeros(data.y.size(), 0);
    ExamplePool pool(data.feature_count, data.x, zeros, 1);
    double total = 0.0;
    for (int i = 0; i < pool.size(); ++i) {
      total += std::abs(predict_regress(head, pool.literals(i)) -
                        targets[static_cast<std::size_t>(i)]);
    }
    std::cout << "mae " << total / pool.size() << '\n';
  }
  return 0;
}

int do_bench(const CliOptions& opt) {
  TMConfig cfg = opt.config;
  cfg.workers = resolve_workers(cfg.workers);
  cfg.validate();
  if (opt.bench_clauses.empty()) {
    throw std::invalid_argument("bench needs --clauses LIST");
  }

  LoadedTask loaded = load_task(opt);
  if (!loaded.test) {
    throw std::invalid_argument("bench needs a test split");
  }

  BenchOptions options;
  options.clause_counts = opt.bench_clauses;
  if (opt.bench_mode == "both") {
    options.modes = {"seq", "par"};
  } else {
    options.modes = {opt.bench_mode};
  }
  options.warmup_epochs = opt.bench_warmup;
  options.measured_epochs = opt.bench_epochs;
  options.workers = cfg.workers;
  options.regression = opt.task == "regress";

  const auto records = bench_sweep(loaded.train, *loaded.test, cfg, options);
  if (opt.out_path.empty()) {
    write_bench_csv(std::cout, records);
  } else {
    std::ofstream out(opt.out_path);
    if (!out) throw std::runtime_error("cannot write CSV: " + opt.out_path);
    write_bench_csv(out, records);
    std::cout << "csv " << opt.out_path << '\n';
  }
  return 0;
}

int do_synth(const CliOptions& opt) {
  if (opt.out_path.empty()) {
    throw std::invalid_argument("synth needs --out PREFIX");
  }
  SynthSplit split;
  if (opt.synth_name == "xor") {
    split = synth_xor(opt.synth_train, opt.synth_test, opt.noise, opt.config.seed);
  } else if (opt.synth_name == "patterns") {
    split = synth_patterns(opt.synth_train, opt.synth_test, opt.synth_classes,
                           opt.synth_zone, opt.noise, opt.config.seed);
  } else if (opt.synth_name == "staircase") {
    split = synth_staircase(opt.synth_train, opt.synth_test, opt.synth_features,
                            opt.config.seed);
  } else {
    throw std::invalid_argument("unknown synthetic dataset '" + opt.synth_name +
                                "'");
  }
  const std::string train_path = opt.out_path + ".train";
  const std::string test_path = opt.out_path + ".test";
  save_dense_binary(train_path, split.train);
  save_dense_binary(test_path, split.test);
  std::cout << "train " << train_path << '\n';
  std::cout << "test " << test_path << '\n';
  return 0;
}

void add_model_flags(CLI::App* cmd, CliOptions& opt, bool single_clause_count) {
  if (single_clause_count) {
    cmd->add_option("--clauses", opt.config.clauses, "Clauses per class (even)");
  }
  cmd->add_option("--margin", opt.config.margin, "Voting margin T");
  cmd->add_option("--specificity", opt.config.specificity, "Specificity s");
  cmd->add_option("--states", opt.config.state_depth, "Automaton depth N");
  cmd->add_flag("--boost", opt.config.boost_true_positive,
                "Boost true positives");
  cmd->add_option("--epochs", opt.config.epochs, "Training epochs");
  cmd->add_option("--workers", opt.config.workers,
                  "Worker threads (0 = hardware)");
  cmd->add_option("--seed", opt.config.seed, "Random seed");
  cmd->add_option("--mode", opt.mode, "Trainer: seq or par")
      ->check(CLI::IsMember({"seq", "par"}));
  cmd->add_option("--task", opt.task, "classify or regress")
      ->check(CLI::IsMember({"classify", "regress"}));
  cmd->add_option("--binarize-bits", opt.binarize_bits,
                  "Quantile bits per continuous column");
}

void add_data_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--data", opt.data_path, "Dataset file (.csv or dense binary)");
  cmd->add_option("--test", opt.test_path, "Held-out dense binary dataset");
  cmd->add_option("--synth", opt.synth_name, "xor | patterns | staircase");
  cmd->add_option("--synth-train", opt.synth_train, "Synthetic train rows");
  cmd->add_option("--synth-test", opt.synth_test, "Synthetic test rows");
  cmd->add_option("--synth-features", opt.synth_features,
                  "Features for staircase");
  cmd->add_option("--classes", opt.synth_classes, "Classes for patterns");
  cmd->add_option("--zone", opt.synth_zone, "Zone width for patterns");
  cmd->add_option("--noise", opt.noise, "Label noise rate");
  cmd->add_option("--train-fraction", opt.train_fraction,
                  "CSV train split fraction");
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Tsetlin machine training, inference and benchmarks"};
  app.require_subcommand(1);
  CliOptions opt;

  auto* train = app.add_subcommand("train", "Fit a model");
  add_model_flags(train, opt, true);
  add_data_flags(train, opt);
  train->add_option("--out", opt.out_path, "Model output path");
  train->add_option("--report", opt.report_path, "Per-epoch CSV report path");
  train->add_option("--binarizer-out", opt.binarizer_out,
                    "Write fitted binarizer spec (CSV input only)");
  train->add_flag("--per-epoch", opt.per_epoch, "Print per-epoch progress");

  auto* eval = app.add_subcommand("eval", "Evaluate a saved model");
  eval->add_option("--model", opt.model_path, "Model file")->required();
  eval->add_option("--data", opt.data_path, "Dataset file")->required();
  eval->add_option("--binarizer", opt.binarizer_in,
                   "Binarizer spec for CSV data");

  auto* bench = app.add_subcommand("bench", "Clause-count timing sweep");
  add_model_flags(bench, opt, false);
  add_data_flags(bench, opt);
  bench->add_option("--clauses", opt.bench_clauses, "Clause counts to sweep")
      ->delimiter(',');
  bench->add_option("--bench-mode", opt.bench_mode, "seq | par | both")
      ->check(CLI::IsMember({"seq", "par", "both"}));
  bench->add_option("--warmup", opt.bench_warmup, "Warm-up epochs (discarded)");
  bench->add_option("--bench-epochs", opt.bench_epochs, "Measured epochs");
  bench->add_option("--out", opt.out_path, "CSV output path (default stdout)");

  auto* synth = app.add_subcommand("synth", "Write a synthetic dataset");
  synth->add_option("--name", opt.synth_name, "xor | patterns | staircase")
      ->required();
  synth->add_option("--train", opt.synth_train, "Train rows");
  synth->add_option("--test", opt.synth_test, "Test rows");
  synth->add_option("--noise", opt.noise, "Label noise rate");
  synth->add_option("--seed", opt.config.seed, "Random seed");
  synth->add_option("--synth-features", opt.synth_features,
                    "Features for staircase");
  synth->add_option("--classes", opt.synth_classes, "Classes for patterns");
  synth->add_option("--zone", opt.synth_zone, "Zone width for patterns");
  synth->add_option("--out", opt.out_path, "Output prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (train->parsed()) return do_train(opt);
    if (eval->parsed()) return do_eval(opt);
    if (bench->parsed()) return do_bench(opt);
    if (synth->parsed()) return do_synth(opt);
  } catch (const MissingFileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("tm");
  for (const auto& arg : args) argv.push_back(arg.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

}  // namespace tsetlin
