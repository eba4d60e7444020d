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

#include "qagate/pipeline.hpp"

#include <set>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "qagate/error.hpp"
#include "qagate/question.hpp"

namespace qagate {
namespace {

template <typename T>
nlohmann::ordered_json or_null(const std::optional<T>& value) {
  return value ? nlohmann::ordered_json(*value) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::QuestionId: return "question_id";
    case Stage::KbSearch: return "kb_search";
    case Stage::Comprehension: return "comprehension";
  }
  return "unknown";
}

nlohmann::ordered_json to_json(const PipelineResponse& r) {
  nlohmann::ordered_json out;
  out["is_question"] = r.is_question;
  out["topic"] = or_null(r.topic);
  out["article_id"] = or_null(r.article_id);
  out["article_title"] = or_null(r.article_title);
  out["search_score"] = or_null(r.search_score);
  out["answer"] = or_null(r.answer);
  out["answer_score"] = or_null(r.answer_score);
  out["backend"] = r.backend ? nlohmann::ordered_json(to_string(*r.backend)) : nullptr;
  if (r.error) {
    out["error"] = {{"stage", to_string(r.error->stage)}, {"detail", r.error->detail}};
  } else {
    out["error"] = nullptr;
  }
  return out;
}

nlohmann::ordered_json to_json(const HealthStatus& h) {
  nlohmann::ordered_json out;
  out["status"] = "ok";
  nlohmann::ordered_json topics = nlohmann::ordered_json::object();
  for (const auto& [name, count] : h.topic_articles) topics[name] = count;
  out["topics"] = std::move(topics);
  out["vocabulary_size"] = h.vocabulary_size;
  nlohmann::ordered_json indexes = nlohmann::ordered_json::array();
  for (const IndexSummary& s : h.indexes) {
    indexes.push_back({{"scope", s.scope}, {"documents", s.documents}, {"vocabulary_size", s.vocabulary_size}});
  }
  out["indexes"] = std::move(indexes);
  out["search_strategy"] = to_string(h.search_strategy);
  out["threshold"] = h.threshold;
  out["comprehension"] = to_string(h.comprehension);
  out["counters"] = {{"requests", h.counters.requests},
                     {"question_id", h.counters.question_id},
                     {"kb_search", h.counters.kb_search},
                     {"comprehension", h.counters.comprehension}};
  return out;
}

Pipeline::Pipeline(DeploymentConfig config, std::vector<KnowledgeBase> kbs, std::unique_ptr<Reader> reader)
    : config_(std::move(config)),
      kbs_(std::move(kbs)),
      search_(kbs_, config_.search_strategy),
      reader_(reader ? std::move(reader) : make_reader(BackendDescriptor::from_config(config_))) {
  for (const KnowledgeBase& kb : kbs_) {
    for (const Article& a : kb.articles) articles_.emplace(std::pair(kb.topic, a.article_id), &a);
  }
}

std::unique_ptr<Pipeline> Pipeline::startup(const std::filesystem::path& config_path) {
  DeploymentConfig config = load_config_file(config_path);
  auto kbs = load_knowledge_bases(config, config_path.parent_path());
  for (const KnowledgeBase& kb : kbs) {
    spdlog::info("loaded topic '{}' ({} articles)", kb.topic, kb.articles.size());
  }
  auto pipeline = std::make_unique<Pipeline>(std::move(config), std::move(kbs));
  spdlog::info("search strategy {}, threshold {}, comprehension {}",
               to_string(pipeline->config().search_strategy), pipeline->config().threshold,
               to_string(pipeline->config().comprehension_mode));
  return pipeline;
}

const Article* Pipeline::find_article(std::string_view topic, std::string_view article_id) const {
  auto it = articles_.find(std::pair(std::string(topic), std::string(article_id)));
  return it == articles_.end() ? nullptr : it->second;
}

StageFlag Pipeline::identify_stage(std::string_view question) const {
  ++question_id_calls_;
  if (!identify(question).is_question) return StageFlag::halt(Stage::QuestionId, "input is not a question");
  return StageFlag::go(Stage::QuestionId);
}

StageFlag Pipeline::search_stage(std::string_view question, std::optional<SearchMatch>& match) const {
  ++kb_search_calls_;
  match = search_.query(question, config_.threshold);
  if (!match) {
    return StageFlag::halt(Stage::KbSearch,
                           fmt::format("no article scored at or above threshold {}", config_.threshold));
  }
  return StageFlag::go(Stage::KbSearch);
}

StageFlag Pipeline::comprehension_stage(std::string_view question, const SearchMatch& match,
                                        std::optional<Answer>& answer) const {
  ++comprehension_calls_;
  const Article* article = find_article(match.topic, match.article_id);
  if (article == nullptr) {
    return StageFlag::halt(Stage::Comprehension, "matched article is missing: " + match.article_id);
  }
  try {
    answer = reader_->answer(question, article->body);
  } catch (const Error& e) {
    spdlog::warn("comprehension failed: {}", e.what());
    return StageFlag::halt(Stage::Comprehension, e.what());
  }
  return StageFlag::go(Stage::Comprehension);
}

PipelineResponse Pipeline::handle_qa(std::string_view question) const {
  ++requests_;
  PipelineResponse response;

  StageFlag flag = identify_stage(question);
  if (!flag.proceed) {
    response.error = StageError{flag.stage, flag.detail};
    return response;
  }
  response.is_question = true;

  std::optional<SearchMatch> match;
  flag = search_stage(question, match);
  if (!flag.proceed) {
    response.error = StageError{flag.stage, flag.detail};
    return response;
  }
  response.topic = match->topic;
  response.article_id = match->article_id;
  response.article_title = match->title;
  response.search_score = match->score;

  std::optional<Answer> answer;
  flag = comprehension_stage(question, *match, answer);
  if (!flag.proceed) {
    response.error = StageError{flag.stage, flag.detail};
    return response;
  }
  response.answer = answer->text;
  response.answer_score = answer->score;
  response.backend = answer->backend;
  return response;
}

StageCounters Pipeline::counters() const {
  return {requests_.load(), question_id_calls_.load(), kb_search_calls_.load(), comprehension_calls_.load()};
}

HealthStatus Pipeline::handle_health() const {
  HealthStatus h;
  for (const KnowledgeBase& kb : kbs_) h.topic_articles.emplace_back(kb.topic, kb.articles.size());

  std::set<std::string_view> terms;
  auto summarize = [&](const std::string& scope, const TfIdfIndex& index) {
    h.indexes.push_back({scope, index.doc_count(), index.vocabulary_size()});
    for (const auto& entry : index.vocabulary()) terms.insert(entry.first);
  };
  if (const TfIdfIndex* index = search_.combined()) summarize("combined", *index);
  if (const SegmentedIndex* indexes = search_.segmented()) {
    for (const auto& [topic, index] : *indexes) summarize(topic, index);
  }
  h.vocabulary_size = terms.size();
  h.search_strategy = config_.search_strategy;
  h.threshold = config_.threshold;
  h.comprehension = reader_->mode();
  h.counters = counters();
  return h;
}

}  // namespace qagate
