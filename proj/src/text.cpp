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

#include "qagate/text.hpp"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace qagate {
namespace {

constexpr char32_t kReplacement = 0xFFFD;

bool is_word_char(char32_t c) { return u_isalnum(static_cast<UChar32>(c)); }

bool is_space(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

bool is_terminator(char32_t c) { return c == U'.' || c == U'!' || c == U'?'; }

// Simple case folding, then lowercase: folding maps a few scripts
// (Cherokee) onto their uppercase forms.
char32_t fold(char32_t c) {
  return static_cast<char32_t>(u_tolower(u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT)));
}

}  // namespace

std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  const auto* s = reinterpret_cast<const uint8_t*>(text.data());
  const auto length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    out.push_back(c < 0 ? kReplacement : static_cast<char32_t>(c));
  }
  return out;
}

std::string encode_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) {
    uint8_t buf[U8_MAX_LENGTH];
    int32_t n = 0;
    U8_APPEND_UNSAFE(buf, n, static_cast<UChar32>(c));
    out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
  }
  return out;
}

std::size_t code_point_length(std::string_view text) { return decode_utf8(text).size(); }

std::string slice_code_points(std::string_view text, std::size_t start, std::size_t end) {
  const std::u32string cps = decode_utf8(text);
  if (start > end || end > cps.size()) return {};
  return encode_utf8(std::u32string_view(cps).substr(start, end - start));
}

std::string to_upper(std::string_view text) {
  std::u32string cps = decode_utf8(text);
  for (char32_t& c : cps) c = static_cast<char32_t>(u_toupper(static_cast<UChar32>(c)));
  return encode_utf8(cps);
}

bool is_blank(std::string_view text) {
  for (char32_t c : decode_utf8(text)) {
    if (!is_space(c)) return false;
  }
  return true;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::u32string current;
  auto flush = [&] {
    if (current.empty()) return;
    tokens.push_back({encode_utf8(current), tokens.size()});
    current.clear();
  };
  for (char32_t c : decode_utf8(text)) {
    if (is_word_char(c)) {
      current.push_back(fold(c));
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

std::vector<std::string> tokenize_terms(std::string_view text) {
  std::vector<std::string> terms;
  for (Token& t : tokenize(text)) terms.push_back(std::move(t.surface));
  return terms;
}

std::vector<Sentence> segment_sentences(std::string_view text) {
  const std::u32string cps = decode_utf8(text);
  std::vector<Sentence> sentences;
  auto emit = [&](std::size_t begin, std::size_t end) {
    while (begin < end && is_space(cps[begin])) ++begin;
    while (end > begin && is_space(cps[end - 1])) --end;
    if (begin == end) return;
    sentences.push_back({encode_utf8(std::u32string_view(cps).substr(begin, end - begin)), begin, end});
  };

  std::size_t start = 0;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (is_terminator(cps[i]) && (i + 1 == cps.size() || is_space(cps[i + 1]))) {
      emit(start, i + 1);
      start = i + 1;
    }
  }
  emit(start, cps.size());
  return sentences;
}

}  // namespace qagate
