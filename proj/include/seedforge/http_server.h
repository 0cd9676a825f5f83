// Copyright 2026 The SeedForge Authors
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

#ifndef SEEDFORGE_HTTP_SERVER_H_
#define SEEDFORGE_HTTP_SERVER_H_

#include <memory>
#include <string>

#include "seedforge/error.h"
#include "seedforge/service.h"

namespace httplib {
class Server;
}

namespace seedforge {

// HTTP status for a library error code.
int http_status_for(ErrorCode code);

// JSON/HTTP facade over WorkbenchService; endpoints are documented in
// docs/openapi.yaml. Every response carries permissive CORS headers and
// errors use the body {"error": <code>, "detail": <text>}.
class HttpServer {
 public:
  explicit HttpServer(WorkbenchService &service);
  ~HttpServer();
  HttpServer(const HttpServer &) = delete;
  HttpServer &operator=(const HttpServer &) = delete;

  // Port 0 binds an ephemeral port. Returns the bound port; throws IoError
  // when the address cannot be bound.
  int bind(const std::string &host, int port);
  // Serves until stop() is called. Requires a successful bind().
  void listen();
  void stop();

 private:
  void install_routes();

  WorkbenchService &service_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace seedforge

#endif  // SEEDFORGE_HTTP_SERVER_H_
