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

#include "qagate/comprehension.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "qagate/error.hpp"
#include "qagate/http_util.hpp"
#include "qagate/text.hpp"

namespace qagate {
namespace {

using nlohmann::json;

class BaselineReader final : public Reader {
 public:
  Answer answer(std::string_view question, std::string_view context) const override {
    return answer_baseline(question, context);
  }
  ComprehensionMode mode() const override { return ComprehensionMode::Baseline; }
};

class RemoteReader final : public Reader {
 public:
  explicit RemoteReader(BackendDescriptor backend) : backend_(std::move(backend)) {}

  Answer answer(std::string_view question, std::string_view context) const override {
    return answer_remote(question, context, backend_);
  }
  ComprehensionMode mode() const override { return ComprehensionMode::Remote; }

 private:
  BackendDescriptor backend_;
};

[[noreturn]] void malformed(const std::string& what) {
  throw Error(Errc::BackendMalformedResponse, what);
}

Answer parse_remote_answer(const std::string& body, std::string_view context) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("response is not a JSON object");

  auto field = [&](const char* key) -> const json& {
    auto it = doc.find(key);
    if (it == doc.end()) malformed(std::string("missing '") + key + "'");
    return *it;
  };
  const json& answer = field("answer");
  const json& start = field("start");
  const json& end = field("end");
  const json& score = field("score");
  if (!answer.is_string()) malformed("'answer' must be a string");
  if (!start.is_number_integer() || !end.is_number_integer()) malformed("'start'/'end' must be integers");
  if (!score.is_number()) malformed("'score' must be a number");

  const double s = score.get<double>();
  if (!(s >= 0.0 && s <= 1.0)) malformed("'score' outside [0, 1]");

  const auto begin = start.get<std::int64_t>();
  const auto finish = end.get<std::int64_t>();
  const std::u32string cps = decode_utf8(context);
  if (begin < 0 || begin >= finish || finish > static_cast<std::int64_t>(cps.size())) {
    malformed("span [" + std::to_string(begin) + ", " + std::to_string(finish) + ") out of range");
  }
  const std::string slice = encode_utf8(std::u32string_view(cps).substr(
      static_cast<std::size_t>(begin), static_cast<std::size_t>(finish - begin)));
  if (slice != answer.get<std::string>()) malformed("context slice does not equal 'answer'");

  return {slice, static_cast<std::size_t>(begin), static_cast<std::size_t>(finish), s,
          ComprehensionMode::Remote};
}

}  // namespace

BackendDescriptor BackendDescriptor::from_config(const DeploymentConfig& config) {
  return {config.comprehension_mode, config.remote_url, config.remote_timeout};
}

Answer answer_baseline(std::string_view question, std::string_view context) {
  if (is_blank(context)) throw Error(Errc::EmptyContext, "context is empty");

  const std::vector<Sentence> sentences = segment_sentences(context);
  std::vector<std::set<std::string, std::less<>>> sentence_terms;
  sentence_terms.reserve(sentences.size());
  for (const Sentence& s : sentences) {
    auto terms = tokenize_terms(s.text);
    sentence_terms.emplace_back(terms.begin(), terms.end());
  }

  std::vector<std::string> query_terms;
  for (std::string& t : tokenize_terms(question)) {
    if (std::find(query_terms.begin(), query_terms.end(), t) == query_terms.end()) {
      query_terms.push_back(std::move(t));
    }
  }

  const auto n = static_cast<double>(sentences.size());
  std::vector<double> weights;
  double max_sum = 0.0;
  for (const std::string& t : query_terms) {
    const auto sf = std::count_if(sentence_terms.begin(), sentence_terms.end(),
                                  [&](const auto& terms) { return terms.contains(t); });
    weights.push_back(std::log(1.0 + n / (1.0 + static_cast<double>(sf))));
    max_sum += weights.back();
  }

  std::size_t best = 0;
  double best_sum = -1.0;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    double sum = 0.0;
    for (std::size_t k = 0; k < query_terms.size(); ++k) {
      if (sentence_terms[i].contains(query_terms[k])) sum += weights[k];
    }
    if (sum > best_sum) {
      best_sum = sum;
      best = i;
    }
  }

  const double score = max_sum > 0.0 ? std::clamp(best_sum / max_sum, 0.0, 1.0) : 0.0;
  const Sentence& s = sentences[best];
  return {s.text, s.start_offset, s.end_offset, score, ComprehensionMode::Baseline};
}

Answer answer_remote(std::string_view question, std::string_view context,
                     const BackendDescriptor& backend) {
  if (backend.mode != ComprehensionMode::Remote || !backend.remote_url) {
    throw Error(Errc::MissingRemoteUrl, "backend is not configured for remote comprehension");
  }
  if (is_blank(context)) throw Error(Errc::EmptyContext, "context is empty");
  auto url = parse_http_url(*backend.remote_url);
  if (!url) throw Error(Errc::BackendUnreachable, "invalid remote_url " + *backend.remote_url);

  std::string path = url->path;
  while (!path.empty() && path.back() == '/') path.pop_back();
  path += "/answer";

  httplib::Client client(url->origin);
  client.set_connection_timeout(backend.timeout);
  client.set_read_timeout(backend.timeout);
  client.set_write_timeout(backend.timeout);

  const json request = {{"question", std::string(question)}, {"context", std::string(context)}};
  const auto started = std::chrono::steady_clock::now();
  auto result = client.Post(path, request.dump(), "application/json");
  if (!result) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    const auto error = result.error();
    const bool timed_out = error == httplib::Error::ConnectionTimeout ||
                           ((error == httplib::Error::Read || error == httplib::Error::Write) &&
                            elapsed >= backend.timeout);
    if (timed_out) {
      throw Error(Errc::BackendTimeout, "no response from " + *backend.remote_url + " within " +
                                            std::to_string(backend.timeout.count()) + " ms");
    }
    throw Error(Errc::BackendUnreachable, *backend.remote_url + ": " + httplib::to_string(error));
  }
  if (result->status != 200) malformed("HTTP " + std::to_string(result->status));
  return parse_remote_answer(result->body, context);
}

std::unique_ptr<Reader> make_reader(const BackendDescriptor& backend) {
  if (backend.mode == ComprehensionMode::Remote) return std::make_unique<RemoteReader>(backend);
  return std::make_unique<BaselineReader>();
}

}  // namespace qagate
