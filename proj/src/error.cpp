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

#include "qagate/error.hpp"

#include <utility>

namespace qagate {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::MalformedJson: return "MalformedJson";
    case Errc::SchemaViolation: return "SchemaViolation";
    case Errc::EmptyKnowledgeBase: return "EmptyKnowledgeBase";
    case Errc::DuplicateArticleId: return "DuplicateArticleId";
    case Errc::EmptyBody: return "EmptyBody";
    case Errc::ThresholdOutOfRange: return "ThresholdOutOfRange";
    case Errc::DuplicateTopicName: return "DuplicateTopicName";
    case Errc::MissingRemoteUrl: return "MissingRemoteUrl";
    case Errc::SourceUnreachable: return "SourceUnreachable";
    case Errc::HttpStatus: return "HttpStatus";
    case Errc::AllDocumentsEmpty: return "AllDocumentsEmpty";
    case Errc::EmptyContext: return "EmptyContext";
    case Errc::BackendUnreachable: return "BackendUnreachable";
    case Errc::BackendTimeout: return "BackendTimeout";
    case Errc::BackendMalformedResponse: return "BackendMalformedResponse";
    case Errc::EmptyCorpus: return "EmptyCorpus";
    case Errc::UnknownTopic: return "UnknownTopic";
    case Errc::EmptyQuestionSet: return "EmptyQuestionSet";
    case Errc::InvalidRange: return "InvalidRange";
    case Errc::BindFailure: return "BindFailure";
  }
  return "Unknown";
}

Error::Error(Errc code, std::string detail, int http_status)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      detail_(std::move(detail)),
      http_status_(http_status) {}

}  // namespace qagate
