// Copyright 2026 The Acrokit Authors.
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


#ifndef ACROKIT_SERVICE_H_
#define ACROKIT_SERVICE_H_

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "acrokit/config.h"
#include "acrokit/glossary.h"
#include "acrokit/identifier.h"
#include "acrokit/predictor.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace acrokit {

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
};

// Request handlers over artifacts loaded once at construction. All methods
// are const and safe to call concurrently.
class AcronymService {
 public:
  AcronymService(ServiceConfig config, Identifier identifier,
                 std::optional<Glossary> glossary, ModelStore models);

  // Loads the glossary, models and cue file named in config. Missing paths
  // leave the corresponding artifact unloaded.
  static AcronymService FromConfig(const ServiceConfig &config);

  // POST /process with body {"text", "expand"?, "top_k"?}.
  HttpResponse Process(std::string_view body) const;

  // GET /glossary/{acronym}
  HttpResponse LookupGlossary(std::string_view acronym) const;

  // GET /health
  HttpResponse Health() const;

  const ServiceConfig &config() const { return config_; }

 private:
  ServiceConfig config_;
  Identifier identifier_;
  std::optional<Glossary> glossary_;
  ModelStore models_;
};

// HTTP front end: the three routes plus static files from
// config.static_dir at "/".
class HttpServer {
 public:
  explicit HttpServer(const AcronymService &service);
  ~HttpServer();

  HttpServer(const HttpServer &) = delete;
  HttpServer &operator=(const HttpServer &) = delete;

  // Blocks until Stop(). Returns false if the address cannot be bound.
  bool Listen(const std::string &host, int port);

  // Binds an ephemeral port and returns it (-1 on failure); follow with
  // ListenAfterBind() on the serving thread.
  int BindToAnyPort(const std::string &host);
  bool ListenAfterBind();

  void Stop();

 private:
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace acrokit

#endif  // ACROKIT_SERVICE_H_
