// Copyright 2026 The QAGate Authors.
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

// qagate: question answering gateway and evaluation harness.
//
//   qagate --config <path> [--port 8080] [--log-level info]
//   qagate eval question-id --corpus <path>
//   qagate eval search --questions <path> --config <path> [--strategy combined|segmented]
//   qagate eval sweep --questions <path> --config <path> --from 0.10 --to 0.30 --step 0.01 --out <csv>
//   qagate eval build-qid-corpus --squad <dev.json> --out <path>

#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "qagate/error.hpp"
#include "qagate/eval.hpp"
#include "qagate/pipeline.hpp"
#include "qagate/server.hpp"

namespace {

qagate::Server* g_server = nullptr;

void on_signal(int) {
  if (g_server != nullptr) g_server->stop();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qagate::Error(qagate::Errc::SourceUnreachable, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << content)) throw qagate::Error(qagate::Errc::SourceUnreachable, "cannot write " + path);
}

std::vector<qagate::KnowledgeBase> load_kbs(const std::string& config_path, qagate::DeploymentConfig& config) {
  config = qagate::load_config_file(config_path);
  return qagate::load_knowledge_bases(config, std::filesystem::path(config_path).parent_path());
}

int serve(const std::string& config_path, const std::string& host, int port) {
  auto pipeline = qagate::Pipeline::startup(config_path);
  qagate::Server server(*pipeline);
  const int bound = server.bind(host, port);
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  spdlog::info("listening on {}:{}", host, bound);
  server.serve();
  g_server = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Question answering gateway: question identification, TF-IDF knowledge-base search, comprehension"};
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string host = "0.0.0.0";
  int port = qagate::kDefaultPort;
  std::string log_level = "info";
  app.add_option("--config", config_path, "deployment config JSON")->envname("KATECHEO_CONFIG");
  app.add_option("--port", port, "listen port")->capture_default_str();
  app.add_option("--host", host, "listen address")->capture_default_str();
  app.add_option("--log-level", log_level, "trace|debug|info|warn|error|off")->capture_default_str();

  auto* eval = app.add_subcommand("eval", "offline evaluation")->require_subcommand(1);

  std::string corpus_path;
  auto* qid = eval->add_subcommand("question-id", "confusion matrix of the question identifier");
  qid->add_option("--corpus", corpus_path, "labeled text JSON")->required();

  std::string questions_path;
  std::string eval_config;
  std::string strategy_name;
  std::optional<double> threshold;
  auto* search = eval->add_subcommand("search", "article-level retrieval accuracy per topic");
  search->add_option("--questions", questions_path, "labeled question JSON")->required();
  search->add_option("--config", eval_config, "deployment config JSON")->envname("KATECHEO_CONFIG")->required();
  search->add_option("--strategy", strategy_name, "combined|segmented (default: both)")
      ->check(CLI::IsMember({"combined", "segmented"}));
  search->add_option("--threshold", threshold, "override the configured threshold")->check(CLI::Range(0.0, 1.0));

  qagate::SweepRange range;
  std::string out_path;
  auto* sweep = eval->add_subcommand("sweep", "on/off-topic accuracy over a threshold range");
  sweep->add_option("--questions", questions_path, "labeled question JSON")->required();
  sweep->add_option("--config", eval_config, "deployment config JSON")->envname("KATECHEO_CONFIG")->required();
  sweep->add_option("--strategy", strategy_name, "combined|segmented (default: configured)")
      ->check(CLI::IsMember({"combined", "segmented"}));
  sweep->add_option("--from", range.from)->capture_default_str();
  sweep->add_option("--to", range.to)->capture_default_str();
  sweep->add_option("--step", range.step)->capture_default_str();
  sweep->add_option("--out", out_path, "CSV output path (default: stdout)");

  std::string squad_path;
  std::size_t n_questions = 3000;
  std::size_t n_statements = 3000;
  auto* build = eval->add_subcommand("build-qid-corpus", "question/statement corpus from a SQuAD-format file");
  build->add_option("--squad", squad_path, "SQuAD-format dataset JSON")->required();
  build->add_option("--out", out_path, "labeled text JSON output")->required();
  build->add_option("--questions", n_questions)->capture_default_str();
  build->add_option("--statements", n_statements)->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  spdlog::set_level(spdlog::level::from_str(log_level));

  try {
    if (qid->parsed()) {
      const auto report = qagate::eval_question_id(qagate::parse_labeled_texts(read_file(corpus_path)));
      const auto& m = report.matrix;
      fmt::print("{:<18}{:>10}{:>11}\n", "actual\\predicted", "question", "statement");
      fmt::print("{:<18}{:>10}{:>11}\n", "question", m.question_as_question, m.question_as_statement);
      fmt::print("{:<18}{:>10}{:>11}\n", "statement", m.statement_as_question, m.statement_as_statement);
      fmt::print("accuracy {:.4f}  false-negative rate {:.4f}  (n = {})\n", report.accuracy,
                 m.false_negative_rate(), m.total());
      return 0;
    }
    if (search->parsed()) {
      qagate::DeploymentConfig config;
      const auto kbs = load_kbs(eval_config, config);
      const auto questions = qagate::parse_labeled_questions(read_file(questions_path));
      std::vector<qagate::SearchStrategy> strategies = {qagate::SearchStrategy::Combined,
                                                        qagate::SearchStrategy::Segmented};
      if (!strategy_name.empty()) strategies = {*qagate::parse_search_strategy(strategy_name)};
      fmt::print("topic,strategy,correct,total,accuracy\n");
      for (auto strategy : strategies) {
        for (const auto& row : qagate::eval_search(questions, kbs, strategy, threshold.value_or(config.threshold))) {
          fmt::print("{},{},{},{},{:.4f}\n", row.topic, qagate::to_string(row.strategy), row.correct, row.total,
                     row.accuracy);
        }
      }
      return 0;
    }
    if (sweep->parsed()) {
      qagate::DeploymentConfig config;
      const auto kbs = load_kbs(eval_config, config);
      const auto strategy = strategy_name.empty() ? config.search_strategy : *qagate::parse_search_strategy(strategy_name);
      const auto rows = qagate::threshold_sweep(qagate::parse_labeled_questions(read_file(questions_path)), kbs,
                                                strategy, range);
      const std::string csv = qagate::sweep_csv(rows);
      if (out_path.empty()) {
        std::cout << csv;
      } else {
        write_file(out_path, csv);
      }
      return 0;
    }
    if (build->parsed()) {
      const auto corpus = qagate::build_question_id_corpus(read_file(squad_path), n_questions, n_statements);
      write_file(out_path, qagate::serialize_labeled_texts(corpus));
      fmt::print("wrote {} items to {}\n", corpus.size(), out_path);
      return 0;
    }

    if (config_path.empty()) {
      std::cerr << "--config (or KATECHEO_CONFIG) is required to serve\n" << app.help();
      return 2;
    }
    return serve(config_path, host, port);
  } catch (const qagate::Error& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
}
