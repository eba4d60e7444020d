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

#include "qagate/question.hpp"

#include <algorithm>
#include <array>

#include "qagate/text.hpp"

namespace qagate {
namespace {

constexpr std::array<std::string_view, 6> kWhWords = {"who", "what", "when", "where", "why", "how"};

}  // namespace

QuestionVerdict identify(std::string_view text) {
  if (text.find('?') != std::string_view::npos) {
    return {true, QuestionTrigger::QuestionMark};
  }
  const auto tokens = tokenize(text);
  if (!tokens.empty() &&
      std::find(kWhWords.begin(), kWhWords.end(), tokens.front().surface) != kWhWords.end()) {
    return {true, QuestionTrigger::WhWord};
  }
  return {false, QuestionTrigger::None};
}

std::string_view to_string(QuestionTrigger trigger) {
  switch (trigger) {
    case QuestionTrigger::QuestionMark: return "question_mark";
    case QuestionTrigger::WhWord: return "wh_word";
    case QuestionTrigger::None: break;
  }
  return "none";
}

}  // namespace qagate
