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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "qagate/knowledge_base.hpp"

namespace qagate {

// Scores closer than this are treated as tied; ties resolve to the
// lexicographically smallest (topic, article_id).
inline constexpr double kScoreTieTolerance = 1e-12;

struct TopicArticle {
  std::string topic;
  Article article;
};

struct DocumentRef {
  std::string topic;
  std::string article_id;
  std::string title;
};

struct SearchMatch {
  std::string topic;
  std::string article_id;
  std::string title;
  double score = 0.0;  // cosine similarity, [0, 1]

  bool operator==(const SearchMatch&) const = default;
};

/// True when `a` outranks `b`: higher score, or a tie broken by
/// (topic, article_id) ascending.
bool outranks(const SearchMatch& a, const SearchMatch& b);

/// TF-IDF index over a fixed document set.
///
/// Document text is title + " " + body. Weights are raw term counts times
/// the smoothed idf ln((1 + N) / (1 + df)) + 1, and every document row is
/// L2-normalized, so a sparse mat-vec against a normalized query yields
/// cosine similarities directly. Documents without tokens are dropped.
class TfIdfIndex {
 public:
  using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;
  using SparseVector = Eigen::SparseVector<double>;

  static TfIdfIndex build(std::span<const TopicArticle> docs);
  static TfIdfIndex build(std::span<const KnowledgeBase> kbs);

  std::size_t doc_count() const { return refs_.size(); }
  std::size_t vocabulary_size() const { return vocabulary_.size(); }

  const std::unordered_map<std::string, Eigen::Index>& vocabulary() const { return vocabulary_; }
  std::optional<Eigen::Index> term_column(std::string_view term) const;
  // 0 for out-of-vocabulary terms.
  std::size_t doc_freq(std::string_view term) const;
  const Eigen::VectorXd& idf() const { return idf_; }
  const SparseMatrix& doc_vectors() const { return docs_; }
  const std::vector<DocumentRef>& documents() const { return refs_; }

  /// Normalized query vector; out-of-vocabulary terms are dropped, so the
  /// result is all-zero when nothing matches.
  SparseVector vectorize(std::string_view text) const;

  /// Cosine similarity of the text against every document, in row order.
  Eigen::VectorXd similarities(std::string_view text) const;

  /// Highest-ranked document regardless of threshold; nullopt when the
  /// query vector is all-zero.
  std::optional<SearchMatch> best_match(std::string_view text) const;

 private:
  TfIdfIndex() = default;

  std::unordered_map<std::string, Eigen::Index> vocabulary_;
  std::vector<std::size_t> doc_freq_;
  Eigen::VectorXd idf_;
  SparseMatrix docs_;
  std::vector<DocumentRef> refs_;
};

// One isolated index per topic.
using SegmentedIndex = std::map<std::string, TfIdfIndex, std::less<>>;

SegmentedIndex build_segmented(std::span<const KnowledgeBase> kbs);

std::optional<SearchMatch> query_combined(const TfIdfIndex& index, std::string_view question,
                                          double threshold);

/// Per-topic winners compared on raw cosine; the best one is returned if it
/// clears the threshold.
std::optional<SearchMatch> query_segmented(const SegmentedIndex& indexes, std::string_view question,
                                           double threshold);

/// The configured search structure: a single combined index or one index
/// per topic.
class KnowledgeSearch {
 public:
  KnowledgeSearch(std::span<const KnowledgeBase> kbs, SearchStrategy strategy);

  SearchStrategy strategy() const;
  std::optional<SearchMatch> best_match(std::string_view question) const;
  std::optional<SearchMatch> query(std::string_view question, double threshold) const;

  // Null under the segmented strategy.
  const TfIdfIndex* combined() const;
  // Null under the combined strategy.
  const SegmentedIndex* segmented() const;

 private:
  std::variant<TfIdfIndex, SegmentedIndex> index_;
};

}  // namespace qagate
