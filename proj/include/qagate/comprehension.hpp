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
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "qagate/knowledge_base.hpp"

namespace qagate {

// An extractive answer. Offsets are Unicode scalar-value indices into the
// context and `text` is exactly the context slice [start, end).
struct Answer {
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;
  double score = 0.0;
  ComprehensionMode backend = ComprehensionMode::Baseline;

  bool operator==(const Answer&) const = default;
};

struct BackendDescriptor {
  ComprehensionMode mode = ComprehensionMode::Baseline;
  std::optional<std::string> remote_url;
  std::chrono::milliseconds timeout = kDefaultRemoteTimeout;

  static BackendDescriptor from_config(const DeploymentConfig& config);
};

/// Deterministic sentence-level answerer.
///
/// Each sentence scores the sum of ln(1 + S / (1 + sf(t))) over the distinct
/// question tokens t it contains, where S is the sentence count and sf(t) the
/// number of sentences containing t. The best sentence wins (earliest on
/// ties); the reported score divides by the same sum over all question
/// tokens, so it lies in [0, 1] and is 0 only when no token occurs anywhere.
Answer answer_baseline(std::string_view question, std::string_view context);

/// POSTs {"question","context"} to <remote_url>/answer and validates the
/// returned span against the context.
Answer answer_remote(std::string_view question, std::string_view context,
                     const BackendDescriptor& backend);

class Reader {
 public:
  virtual ~Reader() = default;
  virtual Answer answer(std::string_view question, std::string_view context) const = 0;
  virtual ComprehensionMode mode() const = 0;
};

std::unique_ptr<Reader> make_reader(const BackendDescriptor& backend);

}  // namespace qagate
