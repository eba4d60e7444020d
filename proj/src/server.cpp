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

#include "qagate/server.hpp"

#include <httplib.h>
#include <spdlog/spdlog.h>

#include "qagate/error.hpp"

namespace qagate {
namespace {

constexpr const char* kJson = "application/json";

void reply_error(httplib::Response& res, int status, const std::string& detail) {
  res.status = status;
  res.set_content(nlohmann::json{{"detail", detail}}.dump(), kJson);
}

}  // namespace

struct Server::Impl {
  const Pipeline& pipeline;
  httplib::Server http;

  explicit Impl(const Pipeline& p) : pipeline(p) {
    http.Post("/api/v1/qa", [this](const httplib::Request& req, httplib::Response& res) {
      nlohmann::json body;
      try {
        body = nlohmann::json::parse(req.body);
      } catch (const nlohmann::json::parse_error&) {
        reply_error(res, 400, "request body is not valid JSON");
        return;
      }
      auto question = body.is_object() ? body.find("question") : body.end();
      if (!body.is_object() || question == body.end() || !question->is_string()) {
        reply_error(res, 400, "request must be a JSON object with a string 'question'");
        return;
      }
      const auto response = pipeline.handle_qa(question->get<std::string>());
      res.set_content(to_json(response).dump(), kJson);
    });

    http.Get("/api/v1/health", [this](const httplib::Request&, httplib::Response& res) {
      res.set_content(to_json(pipeline.handle_health()).dump(), kJson);
    });

    http.set_exception_handler([](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
      std::string what = "internal error";
      try {
        std::rethrow_exception(ep);
      } catch (const std::exception& e) {
        what = e.what();
      } catch (...) {
      }
      spdlog::error("request failed: {}", what);
      reply_error(res, 500, what);
    });

    http.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (res.body.empty()) reply_error(res, res.status, httplib::status_message(res.status));
    });

    http.set_logger([](const httplib::Request& req, const httplib::Response& res) {
      spdlog::debug("{} {} -> {}", req.method, req.path, res.status);
    });
  }
};

Server::Server(const Pipeline& pipeline) : impl_(std::make_unique<Impl>(pipeline)) {}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->http.bind_to_any_port(host) : (impl_->http.bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw Error(Errc::BindFailure, host + ":" + std::to_string(port));
  return bound;
}

void Server::serve() { impl_->http.listen_after_bind(); }

void Server::stop() {
  if (impl_->http.is_running()) impl_->http.stop();
}

void Server::wait_until_ready() const { impl_->http.wait_until_ready(); }

}  // namespace qagate
