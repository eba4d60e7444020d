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

#include <optional>
#include <string>
#include <string_view>

namespace qagate {

// An http(s) URL split the way cpp-httplib wants it: the client is built
// from `origin`, requests are issued against `path`.
struct HttpUrl {
  std::string origin;  // scheme://host[:port]
  std::string path;    // "" or starts with '/'
};

std::optional<HttpUrl> parse_http_url(std::string_view url);

bool is_http_url(std::string_view source);

}  // namespace qagate
