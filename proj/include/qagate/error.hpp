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

#include <stdexcept>
#include <string>
#include <string_view>

namespace qagate {

enum class Errc {
  MalformedJson,
  SchemaViolation,
  EmptyKnowledgeBase,
  DuplicateArticleId,
  EmptyBody,
  ThresholdOutOfRange,
  DuplicateTopicName,
  MissingRemoteUrl,
  SourceUnreachable,
  HttpStatus,
  AllDocumentsEmpty,
  EmptyContext,
  BackendUnreachable,
  BackendTimeout,
  BackendMalformedResponse,
  EmptyCorpus,
  UnknownTopic,
  EmptyQuestionSet,
  InvalidRange,
  BindFailure,
};

std::string_view to_string(Errc code);

// Every failure raised by the library. `detail` names the offending item
// (article index/id, topic, URL) so callers can surface it verbatim.
class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string detail, int http_status = 0);

  Errc code() const noexcept { return code_; }
  const std::string& detail() const noexcept { return detail_; }
  // Only meaningful for Errc::HttpStatus.
  int http_status() const noexcept { return http_status_; }

 private:
  Errc code_;
  std::string detail_;
  int http_status_;
};

}  // namespace qagate
