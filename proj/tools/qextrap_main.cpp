// Copyright 2026 The qextrap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qextrap/acceptance.hpp"
#include "qextrap/experiments.hpp"
#include "qextrap/serialization.hpp"

namespace {

namespace fs = std::filesystem;
using qextrap::Json;

Json load_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  Json j;
  in >> j;
  return j;
}

void write_file(const fs::path& path, const std::string& contents) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

int run_config(const fs::path& config_path, std::optional<std::uint64_t> seed,
               int threads, std::optional<std::string> out_path) {
  qextrap::ExperimentConfig config = qextrap::config_from_json(load_json(config_path));
  if (seed) config.seed = *seed;
  if (threads > 0) config.threads = threads;
  const auto rows = qextrap::run_error_vs_m_multi_T(config);
  const std::string csv = qextrap::rows_to_csv(rows);
  std::string destination = out_path.value_or(config.output_path);
  if (destination.empty()) {
    std::cout << csv;
  } else {
    write_file(destination, csv);
    std::cout << "wrote " << rows.size() << " rows to " << destination << "\n";
  }
  return 0;
}

int run_suite(const fs::path& dir, std::optional<std::uint64_t> seed,
              std::optional<std::string> out_path) {
  qextrap::AcceptanceOptions options;
  if (fs::exists(dir / "suite.json")) {
    const Json overrides = load_json(dir / "suite.json");
    if (overrides.contains("seed")) options.seed = overrides.at("seed").get<std::uint64_t>();
  }
  if (seed) options.seed = *seed;

  Json verdicts = Json::array();
  bool all_pass = true;
  for (int id = 1; id <= qextrap::kAcceptanceCriteria; ++id) {
    const qextrap::Verdict verdict = qextrap::run_acceptance_criterion(id, options);
    all_pass = all_pass && verdict.pass;
    const Json entry{{"id", verdict.id},
                     {"name", verdict.name},
                     {"pass", verdict.pass},
                     {"details", verdict.details}};
    std::cout << entry.dump() << "\n";
    verdicts.push_back(entry);
  }
  const Json summary{{"criteria", qextrap::kAcceptanceCriteria},
                     {"passed", std::count_if(verdicts.begin(), verdicts.end(),
                                              [](const Json& v) {
                                                return v.at("pass").get<bool>();
                                              })},
                     {"verdicts", verdicts}};
  std::cout << summary.dump(2) << "\n";
  if (out_path) write_file(*out_path, summary.dump(2) + "\n");
  return all_pass ? 0 : 1;
}

// Built-in study reproducing the error-vs-degree experiments over several
// simulation times; the data lands in one CSV.
int run_report(const fs::path& out_csv, std::optional<std::uint64_t> seed,
               int threads) {
  qextrap::ExperimentConfig config;
  config.experiment_id = "heisenberg-error-vs-m";
  config.L = 6;
  config.seed = seed.value_or(1);
  config.times = {1.0, 2.0, 4.0};
  config.formula = qextrap::FormulaDescriptor{"suzuki", 1, 0};
  config.method = qextrap::ExperimentConfig::Method::kRichardson;
  config.m_values = {1, 2, 3, 4, 5};
  if (threads > 0) config.threads = threads;
  const auto rows = qextrap::run_error_vs_m_multi_T(config);
  write_file(out_csv, qextrap::rows_to_csv(rows));
  std::cout << "wrote " << rows.size() << " rows to " << out_csv.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trotter-error mitigation studies: Richardson extrapolation and "
               "Chebyshev interpolation on dense statevector simulations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::uint64_t> seed;
  int threads = 0;
  std::optional<std::string> out_path;
  app.add_option("--seed", seed, "override the master seed");
  app.add_option("--threads", threads, "worker threads for node evaluations");
  app.add_option("--out", out_path, "output path override");

  std::string config_path;
  CLI::App* run = app.add_subcommand("run", "run one experiment config (JSON)");
  run->add_option("config", config_path, "experiment config file")->required();

  std::string suite_dir = ".";
  CLI::App* suite = app.add_subcommand("suite", "run the acceptance suite");
  suite->add_option("dir", suite_dir, "config directory (suite.json optional)");

  std::string report_csv;
  CLI::App* report = app.add_subcommand("report", "run the built-in study, write CSV");
  report->add_option("out", report_csv, "output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return run_config(config_path, seed, threads, out_path);
    if (suite->parsed()) return run_suite(suite_dir, seed, out_path);
    if (report->parsed()) return run_report(report_csv, seed, threads);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
  return 0;
}
