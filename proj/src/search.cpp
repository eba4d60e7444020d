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

#include "qagate/search.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "qagate/error.hpp"
#include "qagate/text.hpp"

namespace qagate {
namespace {

using Triplet = Eigen::Triplet<double>;

std::optional<SearchMatch> apply_threshold(std::optional<SearchMatch> match, double threshold) {
  if (match && match->score >= threshold) return match;
  return std::nullopt;
}

}  // namespace

bool outranks(const SearchMatch& a, const SearchMatch& b) {
  if (std::abs(a.score - b.score) > kScoreTieTolerance) return a.score > b.score;
  return std::tie(a.topic, a.article_id) < std::tie(b.topic, b.article_id);
}

TfIdfIndex TfIdfIndex::build(std::span<const TopicArticle> docs) {
  TfIdfIndex index;

  // Term counts per kept document, columns assigned in first-seen order.
  std::vector<std::vector<std::pair<Eigen::Index, double>>> counts;
  for (const TopicArticle& doc : docs) {
    const auto terms = tokenize_terms(doc.article.title + " " + doc.article.body);
    if (terms.empty()) continue;

    std::unordered_map<Eigen::Index, double> tf;
    for (const std::string& term : terms) {
      auto [it, inserted] = index.vocabulary_.try_emplace(term, static_cast<Eigen::Index>(index.vocabulary_.size()));
      if (inserted) index.doc_freq_.push_back(0);
      tf[it->second] += 1.0;
    }
    auto& row = counts.emplace_back(tf.begin(), tf.end());
    std::sort(row.begin(), row.end());
    for (const auto& [column, _] : row) ++index.doc_freq_[static_cast<std::size_t>(column)];
    index.refs_.push_back({doc.topic, doc.article.article_id, doc.article.title});
  }
  if (counts.empty()) {
    throw Error(Errc::AllDocumentsEmpty, "no document produced any tokens");
  }

  const auto n = static_cast<double>(counts.size());
  const auto vocab = static_cast<Eigen::Index>(index.vocabulary_.size());
  index.idf_.resize(vocab);
  for (Eigen::Index t = 0; t < vocab; ++t) {
    const auto df = static_cast<double>(index.doc_freq_[static_cast<std::size_t>(t)]);
    index.idf_[t] = std::log((1.0 + n) / (1.0 + df)) + 1.0;
  }

  std::vector<Triplet> triplets;
  for (std::size_t d = 0; d < counts.size(); ++d) {
    double norm_sq = 0.0;
    for (const auto& [column, tf] : counts[d]) {
      const double w = tf * index.idf_[column];
      norm_sq += w * w;
    }
    const double norm = std::sqrt(norm_sq);
    for (const auto& [column, tf] : counts[d]) {
      triplets.emplace_back(static_cast<Eigen::Index>(d), column, tf * index.idf_[column] / norm);
    }
  }
  index.docs_.resize(static_cast<Eigen::Index>(counts.size()), vocab);
  index.docs_.setFromTriplets(triplets.begin(), triplets.end());
  index.docs_.makeCompressed();
  return index;
}

TfIdfIndex TfIdfIndex::build(std::span<const KnowledgeBase> kbs) {
  std::vector<TopicArticle> docs;
  for (const KnowledgeBase& kb : kbs) {
    for (const Article& a : kb.articles) docs.push_back({kb.topic, a});
  }
  return build(docs);
}

std::optional<Eigen::Index> TfIdfIndex::term_column(std::string_view term) const {
  auto it = vocabulary_.find(std::string(term));
  if (it == vocabulary_.end()) return std::nullopt;
  return it->second;
}

std::size_t TfIdfIndex::doc_freq(std::string_view term) const {
  auto column = term_column(term);
  return column ? doc_freq_[static_cast<std::size_t>(*column)] : 0;
}

TfIdfIndex::SparseVector TfIdfIndex::vectorize(std::string_view text) const {
  SparseVector q(static_cast<Eigen::Index>(vocabulary_.size()));
  for (const std::string& term : tokenize_terms(text)) {
    if (auto column = term_column(term)) q.coeffRef(*column) += idf_[*column];
  }
  const double norm = q.norm();
  if (norm > 0.0) q /= norm;
  return q;
}

Eigen::VectorXd TfIdfIndex::similarities(std::string_view text) const {
  const Eigen::VectorXd q = vectorize(text);
  Eigen::VectorXd scores = docs_ * q;
  return scores.cwiseMax(0.0).cwiseMin(1.0);
}

std::optional<SearchMatch> TfIdfIndex::best_match(std::string_view text) const {
  const SparseVector q = vectorize(text);
  if (q.nonZeros() == 0) return std::nullopt;

  const Eigen::VectorXd dense = q;
  const Eigen::VectorXd scores = (docs_ * dense).cwiseMax(0.0).cwiseMin(1.0);
  std::optional<SearchMatch> best;
  for (Eigen::Index d = 0; d < scores.size(); ++d) {
    const DocumentRef& ref = refs_[static_cast<std::size_t>(d)];
    SearchMatch candidate{ref.topic, ref.article_id, ref.title, scores[d]};
    if (!best || outranks(candidate, *best)) best = std::move(candidate);
  }
  return best;
}

SegmentedIndex build_segmented(std::span<const KnowledgeBase> kbs) {
  SegmentedIndex indexes;
  for (const KnowledgeBase& kb : kbs) {
    try {
      indexes.emplace(kb.topic, TfIdfIndex::build(std::span(&kb, 1)));
    } catch (const Error& e) {
      throw Error(e.code(), "topic '" + kb.topic + "': " + e.detail());
    }
  }
  return indexes;
}

std::optional<SearchMatch> query_combined(const TfIdfIndex& index, std::string_view question,
                                          double threshold) {
  return apply_threshold(index.best_match(question), threshold);
}

namespace {

std::optional<SearchMatch> best_segmented(const SegmentedIndex& indexes, std::string_view question) {
  std::optional<SearchMatch> best;
  for (const auto& [topic, index] : indexes) {
    auto candidate = index.best_match(question);
    if (candidate && (!best || outranks(*candidate, *best))) best = std::move(candidate);
  }
  return best;
}

}  // namespace

std::optional<SearchMatch> query_segmented(const SegmentedIndex& indexes, std::string_view question,
                                           double threshold) {
  return apply_threshold(best_segmented(indexes, question), threshold);
}

KnowledgeSearch::KnowledgeSearch(std::span<const KnowledgeBase> kbs, SearchStrategy strategy)
    : index_(strategy == SearchStrategy::Combined
                 ? std::variant<TfIdfIndex, SegmentedIndex>(TfIdfIndex::build(kbs))
                 : std::variant<TfIdfIndex, SegmentedIndex>(build_segmented(kbs))) {}

SearchStrategy KnowledgeSearch::strategy() const {
  return std::holds_alternative<TfIdfIndex>(index_) ? SearchStrategy::Combined : SearchStrategy::Segmented;
}

std::optional<SearchMatch> KnowledgeSearch::best_match(std::string_view question) const {
  if (const auto* index = std::get_if<TfIdfIndex>(&index_)) return index->best_match(question);
  return best_segmented(std::get<SegmentedIndex>(index_), question);
}

std::optional<SearchMatch> KnowledgeSearch::query(std::string_view question, double threshold) const {
  return apply_threshold(best_match(question), threshold);
}

const TfIdfIndex* KnowledgeSearch::combined() const { return std::get_if<TfIdfIndex>(&index_); }

const SegmentedIndex* KnowledgeSearch::segmented() const { return std::get_if<SegmentedIndex>(&index_); }

}  // namespace qagate
