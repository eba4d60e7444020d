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

#include "qagate/knowledge_base.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "qagate/error.hpp"
#include "qagate/http_util.hpp"
#include "qagate/text.hpp"

namespace qagate {
namespace {

using nlohmann::json;

json parse_json(std::string_view bytes) {
  try {
    return json::parse(bytes.begin(), bytes.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::MalformedJson, e.what());
  }
}

// Rejects keys outside `allowed`.
void check_keys(const json& object, std::initializer_list<std::string_view> allowed,
                const std::string& where) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (auto name : allowed) known = known || key == name;
    if (!known) throw Error(Errc::SchemaViolation, where + ": unknown key '" + key + "'");
  }
}

std::string required_string(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw Error(Errc::SchemaViolation, where + ": missing key '" + key + "'");
  }
  if (!it->is_string()) {
    throw Error(Errc::SchemaViolation, where + ": '" + key + "' must be a string");
  }
  return it->get<std::string>();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::SourceUnreachable, "cannot open " + path.string() + ": " + std::strerror(errno));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(Errc::SourceUnreachable, "read failed: " + path.string());
  return std::move(buf).str();
}

std::string fetch_http(std::string_view source) {
  auto url = parse_http_url(source);
  if (!url) throw Error(Errc::SourceUnreachable, "invalid URL " + std::string(source));

  httplib::Client client(url->origin);
  client.set_follow_location(true);
  client.set_connection_timeout(std::chrono::seconds(10));
  client.set_read_timeout(std::chrono::seconds(30));
  auto result = client.Get(url->path.empty() ? "/" : url->path);
  if (!result) {
    throw Error(Errc::SourceUnreachable,
                std::string(source) + ": " + httplib::to_string(result.error()));
  }
  if (result->status < 200 || result->status >= 300) {
    throw Error(Errc::HttpStatus, std::string(source) + ": HTTP " + std::to_string(result->status),
                result->status);
  }
  return std::move(result->body);
}

}  // namespace

std::string_view to_string(SearchStrategy strategy) {
  return strategy == SearchStrategy::Combined ? "combined" : "segmented";
}

std::string_view to_string(ComprehensionMode mode) {
  return mode == ComprehensionMode::Baseline ? "baseline" : "remote";
}

std::optional<SearchStrategy> parse_search_strategy(std::string_view name) {
  if (name == "combined") return SearchStrategy::Combined;
  if (name == "segmented") return SearchStrategy::Segmented;
  return std::nullopt;
}

std::optional<ComprehensionMode> parse_comprehension_mode(std::string_view name) {
  if (name == "baseline") return ComprehensionMode::Baseline;
  if (name == "remote") return ComprehensionMode::Remote;
  return std::nullopt;
}

std::vector<Article> parse_kb(std::string_view json_bytes) {
  const json doc = parse_json(json_bytes);
  if (!doc.is_array()) throw Error(Errc::SchemaViolation, "knowledge base must be a JSON array");
  if (doc.empty()) throw Error(Errc::EmptyKnowledgeBase, "knowledge base has no articles");

  std::vector<Article> articles;
  articles.reserve(doc.size());
  std::set<std::string, std::less<>> seen;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const json& item = doc[i];
    const std::string where = "article[" + std::to_string(i) + "]";
    if (!item.is_object()) throw Error(Errc::SchemaViolation, where + ": must be an object");
    check_keys(item, {"article_id", "title", "body"}, where);

    Article a{required_string(item, "article_id", where), required_string(item, "title", where),
              required_string(item, "body", where)};
    if (a.article_id.empty()) throw Error(Errc::SchemaViolation, where + ": empty article_id");
    if (is_blank(a.body)) throw Error(Errc::EmptyBody, where + " (" + a.article_id + ")");
    if (!seen.insert(a.article_id).second) throw Error(Errc::DuplicateArticleId, a.article_id);
    articles.push_back(std::move(a));
  }
  return articles;
}

std::string serialize_kb(std::span<const Article> articles) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const Article& a : articles) {
    doc.push_back({{"article_id", a.article_id}, {"title", a.title}, {"body", a.body}});
  }
  return doc.dump();
}

DeploymentConfig load_config(std::string_view json_bytes) {
  const json doc = parse_json(json_bytes);
  if (!doc.is_object()) throw Error(Errc::SchemaViolation, "config must be a JSON object");
  check_keys(doc,
             {"topics", "threshold", "search_strategy", "comprehension_mode", "remote_url",
              "remote_timeout_seconds"},
             "config");

  DeploymentConfig config;

  auto topics = doc.find("topics");
  if (topics == doc.end() || !topics->is_array() || topics->empty()) {
    throw Error(Errc::SchemaViolation, "config: 'topics' must be a non-empty array");
  }
  std::set<std::string, std::less<>> names;
  for (std::size_t i = 0; i < topics->size(); ++i) {
    const json& item = (*topics)[i];
    const std::string where = "topics[" + std::to_string(i) + "]";
    if (!item.is_object()) throw Error(Errc::SchemaViolation, where + ": must be an object");
    check_keys(item, {"name", "kb_source"}, where);
    TopicSource topic{required_string(item, "name", where), required_string(item, "kb_source", where)};
    if (topic.name.empty()) throw Error(Errc::SchemaViolation, where + ": empty name");
    if (topic.kb_source.empty()) throw Error(Errc::SchemaViolation, where + ": empty kb_source");
    if (!names.insert(topic.name).second) throw Error(Errc::DuplicateTopicName, topic.name);
    config.topics.push_back(std::move(topic));
  }

  if (auto it = doc.find("threshold"); it != doc.end()) {
    if (!it->is_number()) throw Error(Errc::SchemaViolation, "config: 'threshold' must be a number");
    config.threshold = it->get<double>();
    if (!(config.threshold >= 0.0 && config.threshold <= 1.0)) {
      throw Error(Errc::ThresholdOutOfRange, std::to_string(config.threshold));
    }
  }

  if (auto it = doc.find("search_strategy"); it != doc.end()) {
    auto strategy = it->is_string() ? parse_search_strategy(it->get<std::string>()) : std::nullopt;
    if (!strategy) {
      throw Error(Errc::SchemaViolation, "config: 'search_strategy' must be \"combined\" or \"segmented\"");
    }
    config.search_strategy = *strategy;
  }

  auto mode_it = doc.find("comprehension_mode");
  if (mode_it == doc.end()) throw Error(Errc::SchemaViolation, "config: missing key 'comprehension_mode'");
  auto mode = mode_it->is_string() ? parse_comprehension_mode(mode_it->get<std::string>()) : std::nullopt;
  if (!mode) {
    throw Error(Errc::SchemaViolation, "config: 'comprehension_mode' must be \"baseline\" or \"remote\"");
  }
  config.comprehension_mode = *mode;

  if (auto it = doc.find("remote_url"); it != doc.end()) {
    if (!it->is_string() || !parse_http_url(it->get<std::string>())) {
      throw Error(Errc::SchemaViolation, "config: 'remote_url' must be an http(s) URL");
    }
    config.remote_url = it->get<std::string>();
  }
  if (config.comprehension_mode == ComprehensionMode::Remote && !config.remote_url) {
    throw Error(Errc::MissingRemoteUrl, "comprehension_mode is \"remote\" but remote_url is absent");
  }
  if (config.comprehension_mode == ComprehensionMode::Baseline && config.remote_url) {
    throw Error(Errc::SchemaViolation, "config: 'remote_url' requires comprehension_mode \"remote\"");
  }

  if (auto it = doc.find("remote_timeout_seconds"); it != doc.end()) {
    if (!it->is_number() || !(it->get<double>() > 0.0)) {
      throw Error(Errc::SchemaViolation, "config: 'remote_timeout_seconds' must be a positive number");
    }
    const double ms = std::ceil(it->get<double>() * 1000.0);
    config.remote_timeout = std::chrono::milliseconds(static_cast<std::int64_t>(ms));
  }
  return config;
}

DeploymentConfig load_config_file(const std::filesystem::path& path) {
  return load_config(read_file(path));
}

std::string fetch_kb(std::string_view source, const std::filesystem::path& base_dir) {
  if (is_http_url(source)) return fetch_http(source);

  std::string_view file = source;
  if (file.starts_with("file://")) file.remove_prefix(7);
  std::filesystem::path path{std::string(file)};
  if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
  return read_file(path);
}

std::vector<KnowledgeBase> load_knowledge_bases(const DeploymentConfig& config,
                                                const std::filesystem::path& base_dir) {
  std::vector<KnowledgeBase> kbs;
  kbs.reserve(config.topics.size());
  for (const TopicSource& topic : config.topics) {
    try {
      kbs.push_back({topic.name, parse_kb(fetch_kb(topic.kb_source, base_dir))});
    } catch (const Error& e) {
      throw Error(e.code(), "topic '" + topic.name + "': " + e.detail(), e.http_status());
    }
  }
  return kbs;
}

}  // namespace qagate
