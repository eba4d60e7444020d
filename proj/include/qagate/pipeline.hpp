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

#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qagate/comprehension.hpp"
#include "qagate/knowledge_base.hpp"
#include "qagate/search.hpp"

namespace qagate {

enum class Stage { QuestionId, KbSearch, Comprehension };

std::string_view to_string(Stage stage);

// Metadata handed from one stage to the next. `detail` is set iff the
// pipeline must stop.
struct StageFlag {
  bool proceed = true;
  Stage stage = Stage::QuestionId;
  std::string detail;

  static StageFlag go(Stage stage) { return {true, stage, {}}; }
  static StageFlag halt(Stage stage, std::string detail) { return {false, stage, std::move(detail)}; }
};

struct StageError {
  Stage stage;
  std::string detail;

  bool operator==(const StageError&) const = default;
};

struct PipelineResponse {
  bool is_question = false;
  std::optional<std::string> topic;
  std::optional<std::string> article_id;
  std::optional<std::string> article_title;
  std::optional<double> search_score;
  std::optional<std::string> answer;
  std::optional<double> answer_score;
  std::optional<ComprehensionMode> backend;
  std::optional<StageError> error;

  bool operator==(const PipelineResponse&) const = default;
};

nlohmann::ordered_json to_json(const PipelineResponse& response);

struct StageCounters {
  std::uint64_t requests = 0;
  std::uint64_t question_id = 0;
  std::uint64_t kb_search = 0;
  std::uint64_t comprehension = 0;
};

struct IndexSummary {
  std::string scope;  // "combined" or a topic name
  std::size_t documents = 0;
  std::size_t vocabulary_size = 0;
};

struct HealthStatus {
  std::vector<std::pair<std::string, std::size_t>> topic_articles;
  std::vector<IndexSummary> indexes;
  std::size_t vocabulary_size = 0;  // distinct terms over all indexes
  SearchStrategy search_strategy = SearchStrategy::Combined;
  double threshold = kDefaultThreshold;
  ComprehensionMode comprehension = ComprehensionMode::Baseline;
  StageCounters counters;
};

nlohmann::ordered_json to_json(const HealthStatus& health);

/// The three-stage question answering graph: question identification,
/// knowledge-base search, comprehension. Everything except the stage
/// counters is immutable after construction, so handle_qa may be called
/// from many threads.
class Pipeline {
 public:
  /// Builds the search structure for `config.search_strategy`. The reader
  /// defaults to the one described by the config.
  Pipeline(DeploymentConfig config, std::vector<KnowledgeBase> kbs, std::unique_ptr<Reader> reader = nullptr);

  Pipeline(const Pipeline&) = delete;
  Pipeline& operator=(const Pipeline&) = delete;

  /// Loads the config file, fetches every KB (relative paths resolve next to
  /// the config) and builds the indexes. Any failure aborts the whole load.
  static std::unique_ptr<Pipeline> startup(const std::filesystem::path& config_path);

  PipelineResponse handle_qa(std::string_view question) const;
  HealthStatus handle_health() const;
  StageCounters counters() const;

  const DeploymentConfig& config() const { return config_; }
  const KnowledgeSearch& search() const { return search_; }
  const Article* find_article(std::string_view topic, std::string_view article_id) const;

 private:
  StageFlag identify_stage(std::string_view question) const;
  StageFlag search_stage(std::string_view question, std::optional<SearchMatch>& match) const;
  StageFlag comprehension_stage(std::string_view question, const SearchMatch& match,
                                std::optional<Answer>& answer) const;

  DeploymentConfig config_;
  std::vector<KnowledgeBase> kbs_;
  KnowledgeSearch search_;
  std::unique_ptr<Reader> reader_;
  std::map<std::pair<std::string, std::string>, const Article*, std::less<>> articles_;

  mutable std::atomic<std::uint64_t> requests_{0};
  mutable std::atomic<std::uint64_t> question_id_calls_{0};
  mutable std::atomic<std::uint64_t> kb_search_calls_{0};
  mutable std::atomic<std::uint64_t> comprehension_calls_{0};
};

}  // namespace qagate
