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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qagate {

struct Token {
  std::string surface;  // lowercased UTF-8
  std::size_t position = 0;

  bool operator==(const Token&) const = default;
};

// Offsets count Unicode scalar values in the source text.
struct Sentence {
  std::string text;
  std::size_t start_offset = 0;
  std::size_t end_offset = 0;

  bool operator==(const Sentence&) const = default;
};

/// Splits on every maximal run of non-alphanumeric code points and
/// lowercases each token (simple case folding). No stemming, no stopwords.
std::vector<Token> tokenize(std::string_view text);

/// Token surfaces only, in source order.
std::vector<std::string> tokenize_terms(std::string_view text);

/// Splits after '.', '!' or '?' when followed by whitespace or end of text.
/// Sentence text is trimmed and always equals the source slice named by its
/// offsets. Empty fragments are dropped.
std::vector<Sentence> segment_sentences(std::string_view text);

// UTF-8 helpers. Invalid sequences decode to U+FFFD.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);
std::size_t code_point_length(std::string_view text);
std::string slice_code_points(std::string_view text, std::size_t start, std::size_t end);

std::string to_upper(std::string_view text);

// True when the text holds nothing but Unicode whitespace.
bool is_blank(std::string_view text);

}  // namespace qagate
