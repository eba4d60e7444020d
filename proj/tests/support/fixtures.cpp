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

#include "support/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qagate::testing {

std::filesystem::path data_dir() { return QAGATE_DATA_DIR; }

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void write_text(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::vector<KnowledgeBase> fixture_kbs() {
  return load_knowledge_bases(load_config_file(data_dir() / "config.json"), data_dir());
}

TempDir::TempDir() {
  static std::mt19937_64 rng{std::random_device{}()};
  path_ = std::filesystem::temp_directory_path() / ("qagate-test-" + std::to_string(rng()));
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string random_words(std::mt19937& rng, std::size_t vocab, std::size_t min_words, std::size_t max_words) {
  std::uniform_int_distribution<std::size_t> len(min_words, max_words);
  std::uniform_int_distribution<std::size_t> word(0, vocab - 1);
  std::string out;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    if (!out.empty()) out += ' ';
    out += "w" + std::to_string(word(rng));
  }
  return out;
}

RandomCorpus random_corpus(std::mt19937& rng, std::size_t max_docs, std::size_t topics, std::size_t vocab) {
  std::uniform_int_distribution<std::size_t> count(1, max_docs);
  std::uniform_int_distribution<std::size_t> topic(0, topics - 1);
  std::bernoulli_distribution duplicate(0.15);
  RandomCorpus corpus;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    std::string words = (duplicate(rng) && !corpus.docs.empty())
                            ? corpus.oracle_docs[rng() % corpus.oracle_docs.size()].words
                            : random_words(rng, vocab, 1, 12);
    std::string t = "topic" + std::to_string(topic(rng));
    std::string id = "d" + std::to_string(i);
    // Empty title: the indexed text is " " + body, which tokenizes to the same words.
    corpus.docs.push_back({t, Article{id, "", words}});
    corpus.oracle_docs.push_back({t, id, words});
  }
  return corpus;
}

}  // namespace qagate::testing
