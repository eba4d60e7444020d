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

#include <chrono>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qagate {

inline constexpr double kDefaultThreshold = 0.15;
inline constexpr std::chrono::milliseconds kDefaultRemoteTimeout{10'000};

struct Article {
  std::string article_id;
  std::string title;
  std::string body;

  bool operator==(const Article&) const = default;
};

struct KnowledgeBase {
  std::string topic;
  std::vector<Article> articles;
};

enum class SearchStrategy { Combined, Segmented };
enum class ComprehensionMode { Baseline, Remote };

struct TopicSource {
  std::string name;
  std::string kb_source;  // file path, file:// URL or http(s) URL
};

struct DeploymentConfig {
  std::vector<TopicSource> topics;
  double threshold = kDefaultThreshold;
  SearchStrategy search_strategy = SearchStrategy::Combined;
  ComprehensionMode comprehension_mode = ComprehensionMode::Baseline;
  std::optional<std::string> remote_url;
  std::chrono::milliseconds remote_timeout = kDefaultRemoteTimeout;
};

std::string_view to_string(SearchStrategy strategy);
std::string_view to_string(ComprehensionMode mode);
std::optional<SearchStrategy> parse_search_strategy(std::string_view name);
std::optional<ComprehensionMode> parse_comprehension_mode(std::string_view name);

/// Parses a KB document: a JSON array of {"article_id","title","body"}
/// objects, unknown keys rejected. Order is preserved.
std::vector<Article> parse_kb(std::string_view json_bytes);

/// Inverse of parse_kb.
std::string serialize_kb(std::span<const Article> articles);

DeploymentConfig load_config(std::string_view json_bytes);

/// Reads and validates a config file from disk.
DeploymentConfig load_config_file(const std::filesystem::path& path);

/// Raw bytes of a KB document. Relative file paths resolve against
/// `base_dir`; HTTP fetches follow at most 5 redirects.
std::string fetch_kb(std::string_view source, const std::filesystem::path& base_dir = {});

/// Fetches and parses every configured topic. Fails on the first bad topic
/// and names it in the error detail.
std::vector<KnowledgeBase> load_knowledge_bases(const DeploymentConfig& config,
                                                const std::filesystem::path& base_dir = {});

}  // namespace qagate
