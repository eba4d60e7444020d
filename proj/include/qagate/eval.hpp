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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qagate/knowledge_base.hpp"
#include "qagate/search.hpp"

namespace qagate {

enum class TextLabel { Question, Statement };

struct LabeledText {
  std::string text;
  TextLabel label = TextLabel::Statement;

  bool operator==(const LabeledText&) const = default;
};

// expected_topic == nullopt marks an off-topic question.
struct LabeledQuestion {
  std::string text;
  std::optional<std::string> expected_topic;
  std::optional<std::string> expected_article_id;
};

struct ConfusionMatrix {
  std::size_t question_as_question = 0;
  std::size_t question_as_statement = 0;
  std::size_t statement_as_question = 0;
  std::size_t statement_as_statement = 0;

  std::size_t total() const {
    return question_as_question + question_as_statement + statement_as_question + statement_as_statement;
  }
  double accuracy() const;
  // Share of true questions predicted as statements.
  double false_negative_rate() const;

  bool operator==(const ConfusionMatrix&) const = default;
};

struct QuestionIdReport {
  ConfusionMatrix matrix;
  double accuracy = 0.0;
};

QuestionIdReport eval_question_id(std::span<const LabeledText> corpus);

struct TopicAccuracy {
  std::string topic;
  SearchStrategy strategy = SearchStrategy::Combined;
  std::size_t correct = 0;
  std::size_t total = 0;
  double accuracy = 0.0;
};

/// Article-level retrieval accuracy per topic. Only questions carrying an
/// expected article id are scored; a hit needs the same (topic, article_id).
std::vector<TopicAccuracy> eval_search(std::span<const LabeledQuestion> questions,
                                       std::span<const KnowledgeBase> kbs, SearchStrategy strategy,
                                       double threshold);

struct SweepRange {
  double from = 0.10;
  double to = 0.30;
  double step = 0.01;
};

struct SweepRow {
  double threshold = 0.0;
  double on_topic_accuracy = 0.0;
  double off_topic_accuracy = 0.0;
};

/// Rows in ascending threshold order. on_topic_accuracy counts on-topic
/// questions still matched to their article; off_topic_accuracy counts
/// off-topic questions left unmatched.
std::vector<SweepRow> threshold_sweep(std::span<const LabeledQuestion> questions,
                                      std::span<const KnowledgeBase> kbs, SearchStrategy strategy,
                                      const SweepRange& range);

std::vector<double> sweep_thresholds(const SweepRange& range);

// "threshold,on_topic_accuracy,off_topic_accuracy" with 4 decimals.
std::string sweep_csv(std::span<const SweepRow> rows);

std::vector<LabeledText> parse_labeled_texts(std::string_view json_bytes);
std::vector<LabeledQuestion> parse_labeled_questions(std::string_view json_bytes);
std::string serialize_labeled_texts(std::span<const LabeledText> corpus);

/// Question/statement corpus from a SQuAD-format dataset: questions are
/// the "qas" entries, statements are sentences segmented out of the
/// paragraph contexts. Both are sampled at even strides so the whole
/// dataset is covered, questions first in the result.
std::vector<LabeledText> build_question_id_corpus(std::string_view squad_json, std::size_t questions = 3000,
                                                  std::size_t statements = 3000);

}  // namespace qagate
