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

#include "qagate/eval.hpp"

#include <cmath>
#include <map>
#include <set>

#include <fmt/format.h>
#include <json.hpp>

#include "qagate/error.hpp"
#include "qagate/question.hpp"
#include "qagate/text.hpp"

namespace qagate {
namespace {

using nlohmann::json;

json parse_array(std::string_view bytes, const char* what) {
  json doc;
  try {
    doc = json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::MalformedJson, e.what());
  }
  if (!doc.is_array()) throw Error(Errc::SchemaViolation, std::string(what) + " must be a JSON array");
  return doc;
}

void reject_unknown_keys(const json& item, std::initializer_list<std::string_view> allowed,
                         const std::string& where) {
  for (const auto& [key, _] : item.items()) {
    bool known = false;
    for (auto name : allowed) known = known || key == name;
    if (!known) throw Error(Errc::SchemaViolation, where + ": unknown key '" + key + "'");
  }
}

std::optional<std::string> optional_string(const json& item, const char* key, const std::string& where) {
  auto it = item.find(key);
  if (it == item.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw Error(Errc::SchemaViolation, where + ": '" + key + "' must be a string or null");
  return it->get<std::string>();
}

bool is_on_topic(const LabeledQuestion& q) { return q.expected_topic && q.expected_article_id; }

bool is_hit(const LabeledQuestion& q, const std::optional<SearchMatch>& match) {
  return match && match->topic == *q.expected_topic && match->article_id == *q.expected_article_id;
}

void check_topics(std::span<const LabeledQuestion> questions, std::span<const KnowledgeBase> kbs) {
  std::set<std::string_view> topics;
  for (const KnowledgeBase& kb : kbs) topics.insert(kb.topic);
  for (const LabeledQuestion& q : questions) {
    if (q.expected_topic && !topics.contains(*q.expected_topic)) {
      throw Error(Errc::UnknownTopic, *q.expected_topic);
    }
  }
}

// Evenly strided picks of `count` items out of `total`.
std::vector<std::size_t> strided(std::size_t total, std::size_t count) {
  std::vector<std::size_t> picks;
  picks.reserve(count);
  for (std::size_t i = 0; i < count; ++i) picks.push_back(i * total / count);
  return picks;
}

}  // namespace

double ConfusionMatrix::accuracy() const {
  const auto n = total();
  return n == 0 ? 0.0 : static_cast<double>(question_as_question + statement_as_statement) / static_cast<double>(n);
}

double ConfusionMatrix::false_negative_rate() const {
  const auto questions = question_as_question + question_as_statement;
  return questions == 0 ? 0.0 : static_cast<double>(question_as_statement) / static_cast<double>(questions);
}

QuestionIdReport eval_question_id(std::span<const LabeledText> corpus) {
  if (corpus.empty()) throw Error(Errc::EmptyCorpus, "question-id corpus is empty");
  ConfusionMatrix m;
  for (const LabeledText& item : corpus) {
    const bool predicted = identify(item.text).is_question;
    if (item.label == TextLabel::Question) {
      ++(predicted ? m.question_as_question : m.question_as_statement);
    } else {
      ++(predicted ? m.statement_as_question : m.statement_as_statement);
    }
  }
  return {m, m.accuracy()};
}

std::vector<TopicAccuracy> eval_search(std::span<const LabeledQuestion> questions,
                                       std::span<const KnowledgeBase> kbs, SearchStrategy strategy,
                                       double threshold) {
  check_topics(questions, kbs);
  std::map<std::string, TopicAccuracy> per_topic;
  for (const LabeledQuestion& q : questions) {
    if (is_on_topic(q)) per_topic.try_emplace(*q.expected_topic, TopicAccuracy{*q.expected_topic, strategy});
  }
  if (per_topic.empty()) throw Error(Errc::EmptyQuestionSet, "no question names an expected article");

  const KnowledgeSearch search(kbs, strategy);
  for (const LabeledQuestion& q : questions) {
    if (!is_on_topic(q)) continue;
    TopicAccuracy& row = per_topic.at(*q.expected_topic);
    ++row.total;
    if (is_hit(q, search.query(q.text, threshold))) ++row.correct;
  }

  // Report in KB order.
  std::vector<TopicAccuracy> rows;
  for (const KnowledgeBase& kb : kbs) {
    auto it = per_topic.find(kb.topic);
    if (it == per_topic.end()) continue;
    it->second.accuracy = static_cast<double>(it->second.correct) / static_cast<double>(it->second.total);
    rows.push_back(std::move(it->second));
  }
  return rows;
}

std::vector<double> sweep_thresholds(const SweepRange& range) {
  const bool valid = std::isfinite(range.from) && std::isfinite(range.to) && std::isfinite(range.step) &&
                     range.from >= 0.0 && range.to <= 1.0 && range.from <= range.to && range.step > 0.0;
  if (!valid) {
    throw Error(Errc::InvalidRange, fmt::format("from {} to {} step {}", range.from, range.to, range.step));
  }
  const auto count = static_cast<std::size_t>(std::floor((range.to - range.from) / range.step + 1e-9)) + 1;
  std::vector<double> thresholds;
  thresholds.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Snap to 10 decimals so 0.10 + 5 * 0.01 compares like a typed 0.15.
    thresholds.push_back(std::round((range.from + static_cast<double>(i) * range.step) * 1e10) / 1e10);
  }
  return thresholds;
}

std::vector<SweepRow> threshold_sweep(std::span<const LabeledQuestion> questions,
                                      std::span<const KnowledgeBase> kbs, SearchStrategy strategy,
                                      const SweepRange& range) {
  const std::vector<double> thresholds = sweep_thresholds(range);
  check_topics(questions, kbs);

  // Best matches are threshold-independent; compute them once.
  const KnowledgeSearch search(kbs, strategy);
  struct Outcome {
    bool on_topic;
    bool hit;  // right article, ignoring the threshold
    std::optional<double> score;
  };
  std::vector<Outcome> outcomes;
  std::size_t on_topic = 0;
  std::size_t off_topic = 0;
  for (const LabeledQuestion& q : questions) {
    if (is_on_topic(q)) {
      auto match = search.best_match(q.text);
      outcomes.push_back({true, is_hit(q, match), match ? std::optional(match->score) : std::nullopt});
      ++on_topic;
    } else if (!q.expected_topic) {
      auto match = search.best_match(q.text);
      outcomes.push_back({false, false, match ? std::optional(match->score) : std::nullopt});
      ++off_topic;
    }
  }
  if (on_topic == 0 || off_topic == 0) {
    throw Error(Errc::EmptyQuestionSet, "sweep needs both on-topic and off-topic questions");
  }

  std::vector<SweepRow> rows;
  rows.reserve(thresholds.size());
  for (double threshold : thresholds) {
    std::size_t kept = 0;
    std::size_t rejected = 0;
    for (const Outcome& o : outcomes) {
      const bool matched = o.score && *o.score >= threshold;
      if (o.on_topic) {
        kept += (matched && o.hit) ? 1 : 0;
      } else {
        rejected += matched ? 0 : 1;
      }
    }
    rows.push_back({threshold, static_cast<double>(kept) / static_cast<double>(on_topic),
                    static_cast<double>(rejected) / static_cast<double>(off_topic)});
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
  std::string out = "threshold,on_topic_accuracy,off_topic_accuracy\n";
  for (const SweepRow& r : rows) {
    out += fmt::format("{:.4f},{:.4f},{:.4f}\n", r.threshold, r.on_topic_accuracy, r.off_topic_accuracy);
  }
  return out;
}

std::vector<LabeledText> parse_labeled_texts(std::string_view json_bytes) {
  const json doc = parse_array(json_bytes, "labeled text corpus");
  std::vector<LabeledText> corpus;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& item = doc[i];
    const std::string where = "item[" + std::to_string(i) + "]";
    if (!item.is_object()) throw Error(Errc::SchemaViolation, where + ": must be an object");
    reject_unknown_keys(item, {"text", "label"}, where);
    auto text = optional_string(item, "text", where);
    auto label = optional_string(item, "label", where);
    if (!text || text->empty()) throw Error(Errc::SchemaViolation, where + ": 'text' must be a non-empty string");
    if (label != "question" && label != "statement") {
      throw Error(Errc::SchemaViolation, where + ": 'label' must be \"question\" or \"statement\"");
    }
    corpus.push_back({std::move(*text), *label == "question" ? TextLabel::Question : TextLabel::Statement});
  }
  return corpus;
}

std::string serialize_labeled_texts(std::span<const LabeledText> corpus) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const LabeledText& item : corpus) {
    doc.push_back({{"text", item.text}, {"label", item.label == TextLabel::Question ? "question" : "statement"}});
  }
  return doc.dump(1);
}

std::vector<LabeledQuestion> parse_labeled_questions(std::string_view json_bytes) {
  const json doc = parse_array(json_bytes, "labeled question set");
  std::vector<LabeledQuestion> questions;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& item = doc[i];
    const std::string where = "item[" + std::to_string(i) + "]";
    if (!item.is_object()) throw Error(Errc::SchemaViolation, where + ": must be an object");
    reject_unknown_keys(item, {"text", "expected_topic", "expected_article_id"}, where);
    LabeledQuestion q;
    auto text = optional_string(item, "text", where);
    if (!text || text->empty()) throw Error(Errc::SchemaViolation, where + ": 'text' must be a non-empty string");
    q.text = std::move(*text);
    q.expected_topic = optional_string(item, "expected_topic", where);
    q.expected_article_id = optional_string(item, "expected_article_id", where);
    if (q.expected_article_id && !q.expected_topic) {
      throw Error(Errc::SchemaViolation, where + ": 'expected_article_id' requires 'expected_topic'");
    }
    questions.push_back(std::move(q));
  }
  return questions;
}

std::vector<LabeledText> build_question_id_corpus(std::string_view squad_json, std::size_t questions,
                                                  std::size_t statements) {
  json doc;
  try {
    doc = json::parse(squad_json.begin(), squad_json.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::MalformedJson, e.what());
  }
  auto data = doc.is_object() ? doc.find("data") : doc.end();
  if (!doc.is_object() || data == doc.end() || !data->is_array()) {
    throw Error(Errc::SchemaViolation, "SQuAD document must be an object with a 'data' array");
  }

  std::vector<std::string> all_questions;
  std::vector<std::string> all_sentences;
  for (const json& article : *data) {
    for (const json& paragraph : article.value("paragraphs", json::array())) {
      for (Sentence& s : segment_sentences(paragraph.value("context", std::string()))) {
        all_sentences.push_back(std::move(s.text));
      }
      for (const json& qa : paragraph.value("qas", json::array())) {
        std::string q = qa.value("question", std::string());
        if (!is_blank(q)) all_questions.push_back(std::move(q));
      }
    }
  }
  if (all_questions.size() < questions || all_sentences.size() < statements) {
    throw Error(Errc::EmptyCorpus, fmt::format("dataset has {} questions and {} context sentences; need {} and {}",
                                               all_questions.size(), all_sentences.size(), questions, statements));
  }

  std::vector<LabeledText> corpus;
  corpus.reserve(questions + statements);
  for (std::size_t i : strided(all_questions.size(), questions)) {
    corpus.push_back({all_questions[i], TextLabel::Question});
  }
  for (std::size_t i : strided(all_sentences.size(), statements)) {
    corpus.push_back({all_sentences[i], TextLabel::Statement});
  }
  return corpus;
}

}  // namespace qagate
