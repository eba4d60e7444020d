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

#include <cmath>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "qagate/error.hpp"
#include "qagate/text.hpp"
#include "support/fixtures.hpp"
#include "support/oracle.hpp"

namespace qagate {
namespace {

std::vector<TopicArticle> docs_of(std::initializer_list<std::tuple<std::string, std::string, std::string>> rows) {
  std::vector<TopicArticle> docs;
  for (const auto& [topic, id, body] : rows) docs.push_back({topic, Article{id, "", body}});
  return docs;
}

TEST(BuildIndex, TwoDocumentIdf) {
  const auto index = TfIdfIndex::build(docs_of({{"T", "d1", "apple apple"}, {"T", "d2", "banana"}}));
  EXPECT_EQ(index.doc_count(), 2u);
  EXPECT_EQ(index.vocabulary_size(), 2u);
  // ln(3/2) + 1
  EXPECT_NEAR(index.idf()[*index.term_column("apple")], 1.4054651081081644, 1e-15);
  EXPECT_NEAR(index.idf()[*index.term_column("banana")], 1.4054651081081644, 1e-15);
  EXPECT_NEAR(index.doc_vectors().coeff(0, *index.term_column("apple")), 1.0, 1e-12);
  EXPECT_EQ(index.doc_vectors().coeff(0, *index.term_column("banana")), 0.0);
}

TEST(BuildIndex, SingleDocumentIsUnitVector) {
  const auto index = TfIdfIndex::build(docs_of({{"T", "d", "x"}}));
  ASSERT_EQ(index.vocabulary_size(), 1u);
  EXPECT_DOUBLE_EQ(index.doc_vectors().coeff(0, 0), 1.0);
}

TEST(BuildIndex, EmptyDocumentsAreDroppedOrRejected) {
  EXPECT_THROW(TfIdfIndex::build(docs_of({{"T", "a", "   "}, {"T", "b", "!!! ---"}})), Error);
  try {
    TfIdfIndex::build(docs_of({{"T", "a", ""}}));
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::AllDocumentsEmpty);
  }
  const auto index = TfIdfIndex::build(docs_of({{"T", "a", "..."}, {"T", "b", "kept"}}));
  ASSERT_EQ(index.doc_count(), 1u);
  EXPECT_EQ(index.documents()[0].article_id, "b");
}

TEST(BuildIndex, TitleIsIndexed) {
  std::vector<TopicArticle> docs = {{"T", Article{"a", "Cold sores", "blisters on lips"}}};
  const auto index = TfIdfIndex::build(docs);
  EXPECT_TRUE(index.term_column("sores"));
  EXPECT_TRUE(index.term_column("blisters"));
}

TEST(BuildIndex, StructuralInvariants) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto corpus = testing::random_corpus(rng, 20, 3);
    const auto index = TfIdfIndex::build(corpus.docs);
    std::set<std::string> terms;
    for (const auto& d : corpus.oracle_docs) {
      for (auto& t : tokenize_terms(d.words)) terms.insert(t);
    }
    EXPECT_EQ(index.vocabulary_size(), terms.size());
    for (const auto& t : terms) {
      EXPECT_GE(index.doc_freq(t), 1u);
      EXPECT_LE(index.doc_freq(t), index.doc_count());
    }
    for (Eigen::Index r = 0; r < index.doc_vectors().rows(); ++r) {
      EXPECT_NEAR(index.doc_vectors().row(r).norm(), 1.0, 1e-9);
    }
  }
}

TEST(QueryCombined, ThreeDocumentOracle) {
  const auto index = TfIdfIndex::build(docs_of(
      {{"T", "d1", "cold sores lips"}, {"T", "d2", "knee joint pain"}, {"T", "d3", "messianic secret jesus"}}));
  const auto match = query_combined(index, "why do we get cold sores", kDefaultThreshold);
  ASSERT_TRUE(match);
  EXPECT_EQ(match->article_id, "d1");
  // sqrt(2/3), from the brute-force oracle.
  EXPECT_NEAR(match->score, 0.816496580927726, 1e-12);
}

TEST(QueryCombined, SelfSimilarityAndOrthogonality) {
  std::vector<TopicArticle> docs = {{"T", Article{"a", "Pain in knee joint", "Applying cold compresses helps."}},
                                    {"T", Article{"b", "Caffeine", "Coffee delays sleep."}}};
  const auto index = TfIdfIndex::build(docs);
  const auto self = query_combined(index, "Pain in knee joint Applying cold compresses helps.", kDefaultThreshold);
  ASSERT_TRUE(self);
  EXPECT_EQ(self->article_id, "a");
  EXPECT_NEAR(self->score, 1.0, 1e-9);
  EXPECT_EQ(self->title, "Pain in knee joint");

  EXPECT_FALSE(query_combined(index, "football world cup", 0.0));
  EXPECT_FALSE(query_combined(index, "", 0.0));
}

TEST(QueryCombined, ThresholdIsInclusive) {
  const auto index = TfIdfIndex::build(docs_of({{"T", "d1", "cold sores lips"}, {"T", "d2", "knee"}}));
  const auto best = index.best_match("cold");
  ASSERT_TRUE(best);
  EXPECT_TRUE(query_combined(index, "cold", best->score));
  EXPECT_FALSE(query_combined(index, "cold", std::nextafter(best->score, 2.0)));
}

TEST(QueryCombined, DuplicatedBodyKeepsScore) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    auto corpus = testing::random_corpus(rng, 10, 1);
    const std::string question = testing::random_words(rng, 24, 1, 6);
    const auto before = TfIdfIndex::build(corpus.docs).similarities(question);
    corpus.docs[0].article.body += " " + corpus.docs[0].article.body;
    const auto after = TfIdfIndex::build(corpus.docs).similarities(question);
    EXPECT_NEAR(before[0], after[0], 1e-9);
  }
}

TEST(QuerySegmented, SingleTopicMatchesCombined) {
  const std::vector<KnowledgeBase> kbs = {
      {"Only", {{"a", "", "cold sores lips"}, {"b", "", "knee pain"}, {"c", "", "cold knee"}}}};
  const auto combined = TfIdfIndex::build(kbs);
  const auto segmented = build_segmented(kbs);
  for (const char* q : {"cold", "knee pain", "lips sores", "nothing here", "cold knee knee"}) {
    EXPECT_EQ(query_combined(combined, q, 0.0), query_segmented(segmented, q, 0.0)) << q;
  }
}

TEST(QuerySegmented, GlobalWinnerIsBestPerTopicWinner) {
  const std::vector<KnowledgeBase> kbs = {
      {"A", {{"a1", "", "cold sores lips blisters"}, {"a2", "", "heart disease aspirin"}}},
      {"B", {{"b1", "", "cold weather snow winter lips"}, {"b2", "", "jesus secret"}}}};
  const auto segmented = build_segmented(kbs);
  ASSERT_EQ(segmented.size(), 2u);
  const auto a = segmented.at("A").best_match("cold sores");
  const auto b = segmented.at("B").best_match("cold sores");
  ASSERT_TRUE(a && b);
  ASSERT_GT(a->score, b->score);
  EXPECT_EQ(query_segmented(segmented, "cold sores", 0.15), a);
  // Above the winner's score nothing is returned.
  EXPECT_FALSE(query_segmented(segmented, "cold sores", std::nextafter(a->score, 2.0)));
}

TEST(QuerySegmented, TiesGoToSmallestTopicThenId) {
  const std::vector<KnowledgeBase> kbs = {{"Zeta", {{"z", "", "messianic secret of jesus"}}},
                                          {"Alpha", {{"y", "", "messianic secret of jesus"}}}};
  const auto match = query_segmented(build_segmented(kbs), "messianic secret of jesus", 0.15);
  ASSERT_TRUE(match);
  EXPECT_EQ(match->topic, "Alpha");
  EXPECT_NEAR(match->score, 1.0, 1e-9);

  const auto combined = query_combined(
      TfIdfIndex::build(docs_of({{"T", "b", "same words"}, {"T", "a", "same words"}, {"S", "c", "other"}})),
      "same words", 0.0);
  ASSERT_TRUE(combined);
  EXPECT_EQ(combined->article_id, "a");
}

TEST(SearchProperties, MatchesBruteForceOracle) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const auto corpus = testing::random_corpus(rng, 20, 3);
    const auto index = TfIdfIndex::build(corpus.docs);
    for (int q = 0; q < 10; ++q) {
      const std::string question = testing::random_words(rng, 30, 1, 8);
      const auto expected = oracle::best(corpus.oracle_docs, question);
      const auto actual = index.best_match(question);
      ASSERT_EQ(expected.has_value(), actual.has_value()) << question;
      if (!expected) continue;
      EXPECT_EQ(actual->article_id, corpus.oracle_docs[expected->doc].id);
      EXPECT_NEAR(actual->score, expected->score, 1e-9);
      EXPECT_GE(actual->score, 0.0);
      EXPECT_LE(actual->score, 1.0);
    }
  }
}

TEST(SearchProperties, SelfSimilarityOnRandomCorpora) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto corpus = testing::random_corpus(rng, 20, 2);
    const auto index = TfIdfIndex::build(corpus.docs);
    const auto& target = corpus.oracle_docs[rng() % corpus.oracle_docs.size()];
    const auto match = query_combined(index, target.words, 0.0);
    ASSERT_TRUE(match);
    EXPECT_NEAR(match->score, 1.0, 1e-9);
    // The winner is the document itself or a copy of its text.
    const auto winner = std::find_if(corpus.oracle_docs.begin(), corpus.oracle_docs.end(),
                                     [&](const auto& d) { return d.id == match->article_id; });
    EXPECT_EQ(tokenize_terms(winner->words), tokenize_terms(target.words));
  }
}

TEST(SearchProperties, ThresholdMatchesAreDownClosed) {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const auto corpus = testing::random_corpus(rng, 15, 2);
    const std::vector<KnowledgeBase> kbs = [&] {
      std::map<std::string, KnowledgeBase> by_topic;
      for (const auto& d : corpus.docs) {
        by_topic[d.topic].topic = d.topic;
        by_topic[d.topic].articles.push_back(d.article);
      }
      std::vector<KnowledgeBase> out;
      for (auto& [_, kb] : by_topic) out.push_back(kb);
      return out;
    }();
    const std::string question = testing::random_words(rng, 30, 1, 6);
    for (auto strategy : {SearchStrategy::Combined, SearchStrategy::Segmented}) {
      const KnowledgeSearch search(kbs, strategy);
      bool seen_none = false;
      for (int step = 0; step <= 100; ++step) {
        const bool matched = search.query(question, step / 100.0).has_value();
        if (matched) {
          EXPECT_FALSE(seen_none) << "match reappeared at threshold " << step / 100.0;
        } else {
          seen_none = true;
        }
      }
    }
  }
}

TEST(KnowledgeSearch, StrategyDispatch) {
  const auto kbs = testing::fixture_kbs();
  const KnowledgeSearch combined(kbs, SearchStrategy::Combined);
  EXPECT_TRUE(combined.combined());
  EXPECT_FALSE(combined.segmented());
  const KnowledgeSearch segmented(kbs, SearchStrategy::Segmented);
  EXPECT_FALSE(segmented.combined());
  ASSERT_TRUE(segmented.segmented());
  EXPECT_EQ(segmented.segmented()->size(), 2u);
}

}  // namespace
}  // namespace qagate
