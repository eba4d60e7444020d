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

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "qagate/knowledge_base.hpp"
#include "qagate/search.hpp"
#include "support/oracle.hpp"

namespace qagate::testing {

std::filesystem::path data_dir();
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& content);

// The two Stack-Exchange-style topics shipped under data/.
std::vector<KnowledgeBase> fixture_kbs();

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Random corpora over a small closed vocabulary ("w0".."wK"), so that
// duplicate documents and shared terms occur often.
struct RandomCorpus {
  std::vector<TopicArticle> docs;
  std::vector<oracle::Doc> oracle_docs;
};

RandomCorpus random_corpus(std::mt19937& rng, std::size_t max_docs, std::size_t topics, std::size_t vocab = 24);
std::string random_words(std::mt19937& rng, std::size_t vocab, std::size_t min_words, std::size_t max_words);

}  // namespace qagate::testing
