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


#include "acrokit/service.h"

#include <filesystem>
#include <map>
#include <set>

#include "acrokit/annotation_json.h"
#include "httplib.h"
#include "json.hpp"

namespace acrokit {

using json = nlohmann::json;

namespace {

HttpResponse JsonResponse(int status, const json &body) {
  return {status, body.dump(), "application/json"};
}

HttpResponse Error(int status, const std::string &message) {
  return JsonResponse(status, {{"error", message}});
}

}  // namespace

AcronymService::AcronymService(ServiceConfig config, Identifier identifier,
                               std::optional<Glossary> glossary, ModelStore models)
    : config_(std::move(config)),
      identifier_(std::move(identifier)),
      glossary_(std::move(glossary)),
      models_(std::move(models)) {}

AcronymService AcronymService::FromConfig(const ServiceConfig &config) {
  IdentifierOptions options;
  if (!config.cues_path.empty()) options = LoadIdentifierOptions(config.cues_path);
  std::optional<Glossary> glossary;
  if (!config.glossary_path.empty()) glossary = Glossary::Load(config.glossary_path);
  ModelStore models;
  if (!config.models_dir.empty() && std::filesystem::is_directory(config.models_dir)) {
    models = ModelStore::LoadDir(config.models_dir);
  }
  return AcronymService(config, Identifier(std::move(options)), std::move(glossary),
                        std::move(models));
}

HttpResponse AcronymService::Process(std::string_view body) const {
  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error &) {
    return Error(400, "body is not valid JSON");
  }
  if (!request.is_object()) return Error(400, "body must be a JSON object");
  if (!request.contains("text") || !request["text"].is_string()) {
    return Error(400, "field 'text' must be a string");
  }
  bool expand = false;
  int top_k = config_.default_top_k;
  if (request.contains("expand")) {
    if (!request["expand"].is_boolean()) return Error(400, "field 'expand' must be a boolean");
    expand = request["expand"].get<bool>();
  }
  if (request.contains("top_k")) {
    if (!request["top_k"].is_number_integer() || request["top_k"].get<int64_t>() < 1) {
      return Error(400, "field 'top_k' must be a positive integer");
    }
    top_k = static_cast<int>(std::min<int64_t>(request["top_k"].get<int64_t>(), 1 << 20));
  }
  const std::string &text = request["text"].get_ref<const std::string &>();
  if (static_cast<int64_t>(text.size()) > config_.max_text_bytes) {
    return Error(413, "text exceeds " + std::to_string(config_.max_text_bytes) + " bytes");
  }
  if (expand && (!glossary_ || models_.empty())) {
    return Error(503, "expansion requested but models are not loaded");
  }

  const TokenSequence seq = Tokenize(text);
  const AIAnnotation annotation = identifier_.Identify(seq);

  std::map<std::string, json> rows;
  for (const DefinitionRow &row : SummarizeDefinitions(annotation)) {
    rows[row.acronym] = {{"acronym", row.acronym},
                         {"long_form", row.long_form},
                         {"rule", std::string(RuleName(row.rule))},
                         {"source", "local"}};
  }
  json expansions = json::object();
  for (size_t i = 0; i < annotation.acronyms.size(); ++i) {
    const AcronymSpan &mention = annotation.acronyms[i];
    if (rows.count(mention.text) && rows[mention.text]["source"] == "local") continue;
    if (!expand) {
      rows.try_emplace(mention.text, json{{"acronym", mention.text},
                                          {"long_form", nullptr},
                                          {"source", "none"}});
      continue;
    }
    const RankedPrediction prediction = Predict(seq, mention, *glossary_, models_);
    expansions[std::to_string(i)] = PredictionToJson(prediction, top_k);
    if (!rows.count(mention.text)) {
      const bool known = prediction.source != PredictionSource::kUnknown;
      rows[mention.text] = {
          {"acronym", mention.text},
          {"long_form", known ? json(prediction.chosen) : json(nullptr)},
          {"source", known ? std::string(PredictionSourceName(prediction.source))
                           : std::string("none")}};
    }
  }

  json response;
  response["annotations"] = AnnotationToJson(seq, annotation);
  response["expansions"] = std::move(expansions);
  response["glossary"] = json::array();
  for (auto &[acronym, row] : rows) response["glossary"].push_back(std::move(row));
  return JsonResponse(200, response);
}

HttpResponse AcronymService::LookupGlossary(std::string_view acronym) const {
  std::optional<GlossaryEntry> entry;
  if (glossary_) entry = glossary_->Lookup(acronym);
  if (!entry) {
    return JsonResponse(404, {{"error", "unknown acronym"}, {"query", std::string(acronym)}});
  }
  json body = GlossaryEntryToJson(*entry);
  body["query"] = std::string(acronym);
  return JsonResponse(200, body);
}

HttpResponse AcronymService::Health() const {
  return JsonResponse(200, {{"status", "ok"},
                            {"models_loaded", models_.size()},
                            {"glossary_entries", glossary_ ? glossary_->size() : 0}});
}

HttpServer::HttpServer(const AcronymService &service)
    : server_(std::make_unique<httplib::Server>()) {
  const ServiceConfig &config = service.config();
  server_->set_payload_max_length(static_cast<size_t>(config.max_text_bytes) * 2 + 65536);
  auto send = [](httplib::Response &res, const HttpResponse &out) {
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  server_->Post("/process", [&service, send](const httplib::Request &req,
                                             httplib::Response &res) {
    send(res, service.Process(req.body));
  });
  server_->Get("/glossary/(.+)", [&service, send](const httplib::Request &req,
                                                  httplib::Response &res) {
    send(res, service.LookupGlossary(req.matches[1].str()));
  });
  server_->Get("/health", [&service, send](const httplib::Request &,
                                           httplib::Response &res) {
    send(res, service.Health());
  });
  if (!config.static_dir.empty()) server_->set_mount_point("/", config.static_dir);
}

HttpServer::~HttpServer() = default;

bool HttpServer::Listen(const std::string &host, int port) {
  return server_->listen(host, port);
}

int HttpServer::BindToAnyPort(const std::string &host) {
  return server_->bind_to_any_port(host);
}

bool HttpServer::ListenAfterBind() { return server_->listen_after_bind(); }

void HttpServer::Stop() { server_->stop(); }

}  // namespace acrokit
