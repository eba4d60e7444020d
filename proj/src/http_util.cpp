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

#include "qagate/http_util.hpp"

namespace qagate {

bool is_http_url(std::string_view source) {
  return source.starts_with("http://") || source.starts_with("https://");
}

std::optional<HttpUrl> parse_http_url(std::string_view url) {
  if (!is_http_url(url)) return std::nullopt;
  const auto scheme_end = url.find("://") + 3;
  const auto path_begin = url.find('/', scheme_end);
  HttpUrl out;
  out.origin = std::string(url.substr(0, path_begin));
  if (out.origin.size() == scheme_end) return std::nullopt;  // no host
  if (path_begin != std::string_view::npos) {
    out.path = std::string(url.substr(path_begin));
  }
  return out;
}

}  // namespace qagate
