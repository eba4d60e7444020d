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

#include <string_view>

namespace qagate {

enum class QuestionTrigger { QuestionMark, WhWord, None };

struct QuestionVerdict {
  bool is_question = false;
  QuestionTrigger trigger = QuestionTrigger::None;

  bool operator==(const QuestionVerdict&) const = default;
};

/// Rule-based question check: a '?' anywhere in the text, otherwise a
/// first token from {who, what, when, where, why, how}.
QuestionVerdict identify(std::string_view text);

std::string_view to_string(QuestionTrigger trigger);

}  // namespace qagate
