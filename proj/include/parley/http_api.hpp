// Copyright 2026 The Parley Authors
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

#include "parley/error.hpp"
#include "parley/service.hpp"

namespace parley {

// JSON-over-HTTP front end of a SessionManager.
//
//   POST /api/sessions                  {user_id, mode, persona_id?, script_id?, seed?, clock?}
//   POST /api/sessions/{id}/messages    {text}
//   POST /api/sessions/{id}/profile     {display_name?, avatar?}
//   GET  /api/sessions/{id}/report
//   GET  /api/sessions/{id}/transcript
//   GET  /api/personas
class HttpApi {
 public:
  // Static files under web_dir (if non-empty) are served at "/".
  explicit HttpApi(SessionManager& manager, const std::string& web_dir = "");
  ~HttpApi();
  HttpApi(const HttpApi&) = delete;
  HttpApi& operator=(const HttpApi&) = delete;

  // Blocks until stop().
  bool listen(const std::string& host, int port);
  // Binds an ephemeral port and returns it; call listen_after_bind() next.
  int bind_any_port(const std::string& host);
  bool listen_after_bind();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

int http_status(ErrorCode code);

}  // namespace parley
