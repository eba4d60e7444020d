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

#include <memory>
#include <string>

#include "qagate/pipeline.hpp"

namespace qagate {

inline constexpr int kDefaultPort = 8080;

/// Single-endpoint REST front end for a Pipeline:
///   POST /api/v1/qa      {"question": string} -> PipelineResponse
///   GET  /api/v1/health  -> HealthStatus
/// Stage failures are reported in a 200 body; only malformed requests get 4xx.
class Server {
 public:
  explicit Server(const Pipeline& pipeline);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds the listener; port 0 picks a free port. Returns the bound port.
  int bind(const std::string& host, int port);

  /// Serves until stop(); requires a successful bind().
  void serve();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace qagate
