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

#include "seedforge/http_server.h"

#include "httplib.h"
#include "json.hpp"

namespace seedforge {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr const char *kJsonType = "application/json; charset=utf-8";

void send_json(httplib::Response &res, int status, const ordered_json &body) {
  res.status = status;
  res.set_content(body.dump(), kJsonType);
}

void send_error(httplib::Response &res, int status, std::string_view code,
                const std::string &detail) {
  ordered_json body;
  body["error"] = std::string(code);
  body["detail"] = detail;
  send_json(res, status, body);
}

json parse_body(const httplib::Request &req) {
  if (req.body.empty()) return json::object();
  try {
    json body = json::parse(req.body);
    if (!body.is_object()) {
      throw Error(ErrorCode::kInvalidArgument, "body: expected a JSON object");
    }
    return body;
  } catch (const json::parse_error &e) {
    throw Error::parse_at_offset(e.byte, std::string("body: ") + e.what());
  }
}

Error bad_field(const std::string &field, const std::string &what) {
  return Error(ErrorCode::kInvalidArgument, field + ": " + what);
}

std::optional<std::string> optional_string(const json &body, const char *key) {
  if (!body.contains(key) || body[key].is_null()) return std::nullopt;
  if (!body[key].is_string()) throw bad_field(key, "must be a string");
  return body[key].get<std::string>();
}

std::string required_string(const json &body, const char *key) {
  auto value = optional_string(body, key);
  if (!value) throw bad_field(key, "is required");
  return *value;
}

std::optional<bool> optional_bool(const json &body, const char *key) {
  if (!body.contains(key) || body[key].is_null()) return std::nullopt;
  if (!body[key].is_boolean()) throw bad_field(key, "must be a boolean");
  return body[key].get<bool>();
}

std::vector<std::string> string_list(const json &body, const char *key) {
  if (!body.contains(key)) throw bad_field(key, "is required");
  if (!body[key].is_array()) throw bad_field(key, "must be an array");
  std::vector<std::string> out;
  for (const auto &item : body[key]) {
    if (!item.is_string()) throw bad_field(key, "must contain strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

long long required_k(const json &body) {
  if (!body.contains("k")) throw bad_field("k", "is required");
  if (!body["k"].is_number_integer()) throw bad_field("k", "must be an integer");
  return body["k"].get<long long>();
}

ordered_json candidates_json(const std::vector<CandidateEntry> &candidates) {
  ordered_json list = ordered_json::array();
  for (const CandidateEntry &candidate : candidates) {
    list.push_back(candidate_to_json(candidate));
  }
  ordered_json body;
  body["candidates"] = std::move(list);
  return body;
}

DictionaryFormat format_param(const httplib::Request &req,
                              const char *fallback) {
  const std::string name =
      req.has_param("format") ? req.get_param_value("format") : fallback;
  try {
    return parse_dictionary_format(name);
  } catch (const Error &) {
    throw bad_field("format", "unknown format '" + name + "'");
  }
}

// Runs a handler, translating library and JSON errors to error responses.
template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
  return [fn](const httplib::Request &req, httplib::Response &res) {
    try {
      fn(req, res);
    } catch (const Error &e) {
      send_error(res, http_status_for(e.code()), error_code_name(e.code()),
                 e.detail());
    } catch (const json::exception &e) {
      send_error(res, 400, "InvalidArgument", e.what());
    } catch (const std::exception &e) {
      send_error(res, 500, "Internal", e.what());
    }
  };
}

}  // namespace

int http_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateEntity:
      return 409;
    case ErrorCode::kNotFound:
      return 404;
    case ErrorCode::kEmptySurface:
    case ErrorCode::kUnknownCandidate:
    case ErrorCode::kParseError:
    case ErrorCode::kInvalidSpan:
    case ErrorCode::kInvalidArgument:
      return 400;
    case ErrorCode::kNoResolvableSeed:
      return 422;
    case ErrorCode::kResourceUnavailable:
      return 503;
    case ErrorCode::kStorageError:
    case ErrorCode::kIoError:
    case ErrorCode::kEmptyVocabulary:
    case ErrorCode::kEmptyIndex:
      return 500;
  }
  return 500;
}

HttpServer::HttpServer(WorkbenchService &service)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
  install_routes();
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string &host, int port) {
  int bound = -1;
  if (port == 0) {
    bound = server_->bind_to_any_port(host);
  } else if (server_->bind_to_port(host, port)) {
    bound = port;
  }
  if (bound < 0) {
    throw Error(ErrorCode::kIoError,
                "cannot bind " + host + ":" + std::to_string(port));
  }
  return bound;
}

void HttpServer::listen() { server_->listen_after_bind(); }

void HttpServer::stop() {
  if (server_) server_->stop();
}

void HttpServer::install_routes() {
  httplib::Server &s = *server_;
  WorkbenchService &svc = service_;

  s.set_default_headers({
      {"Access-Control-Allow-Origin", "*"},
      {"Access-Control-Allow-Methods", "GET, POST, PATCH, DELETE, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type"},
  });
  s.set_error_handler(
      [](const httplib::Request &req, httplib::Response &res) {
        if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
        send_error(res, res.status, res.status == 404 ? "NotFound" : "Error",
                   "no route for " + req.method + " " + req.path);
        return httplib::Server::HandlerResponse::Handled;
      });
  s.Options(".*", [](const httplib::Request &, httplib::Response &res) {
    res.status = 204;
  });

  s.Get("/models", guarded([&svc](const auto &, auto &res) {
          ordered_json list = ordered_json::array();
          for (const ModelDescriptor &model : svc.models()) {
            list.push_back({{"id", model.id},
                            {"kind", std::string(model_kind_name(model.kind))}});
          }
          send_json(res, 200, list);
        }));

  s.Post("/expand", guarded([&svc](const auto &req, auto &res) {
           const json body = parse_body(req);
           const auto entities = string_list(body, "entities");
           const auto models = string_list(body, "models");
           const long long k = required_k(body);
           send_json(res, 200,
                     candidates_json(svc.expand(entities, models, k)));
         }));

  s.Post("/sessions", guarded([&svc](const auto &req, auto &res) {
           const json body = parse_body(req);
           const std::string name = optional_string(body, "name").value_or("");
           const auto seeds = optional_string(body, "seeds");
           Session session = seeds ? svc.create_session(name, *seeds)
                                   : svc.create_session(name);
           send_json(res, 201, session_to_json(session));
         }));

  s.Get(R"(/sessions/([^/]+))", guarded([&svc](const auto &req, auto &res) {
          send_json(res, 200, session_to_json(svc.get_session(req.matches[1].str())));
        }));

  s.Post(R"(/sessions/([^/]+)/entities)",
         guarded([&svc](const auto &req, auto &res) {
           const json body = parse_body(req);
           const std::string surface = required_string(body, "surface");
           Label label = Label::kPositive;
           if (auto text = optional_string(body, "label")) {
             try {
               label = parse_label(*text);
             } catch (const Error &e) {
               throw bad_field("label", e.detail());
             }
           }
           send_json(res, 201,
                     session_to_json(svc.add_entity(req.matches[1].str(),
                                                    surface, label)));
         }));

  s.Patch(R"(/sessions/([^/]+)/entities/(.+))",
          guarded([&svc](const auto &req, auto &res) {
            const json body = parse_body(req);
            auto new_surface = optional_string(body, "new_surface");
            auto active = optional_bool(body, "active");
            send_json(res, 200,
                      session_to_json(svc.update_entity(
                          req.matches[1].str(), req.matches[2].str(),
                          std::move(new_surface), active)));
          }));

  s.Delete(R"(/sessions/([^/]+)/entities/(.+))",
           guarded([&svc](const auto &req, auto &res) {
             send_json(res, 200,
                       session_to_json(svc.delete_entity(
                           req.matches[1].str(), req.matches[2].str())));
           }));

  s.Post(R"(/sessions/([^/]+)/import)",
         guarded([&svc](const auto &req, auto &res) {
           const DictionaryFormat format = format_param(req, "csv");
           send_json(res, 200,
                     session_to_json(svc.import_entities(req.matches[1].str(),
                                                         req.body, format)));
         }));

  s.Post(R"(/sessions/([^/]+)/expand)",
         guarded([&svc](const auto &req, auto &res) {
           const json body = parse_body(req);
           const auto models = string_list(body, "models");
           const long long k = required_k(body);
           send_json(res, 200,
                     candidates_json(
                         svc.expand_session(req.matches[1].str(), models, k)));
         }));

  s.Post(R"(/sessions/([^/]+)/feedback)",
         guarded([&svc](const auto &req, auto &res) {
           const json body = parse_body(req);
           if (!body.contains("decisions") || !body["decisions"].is_array()) {
             throw bad_field("decisions", "must be an array");
           }
           std::vector<WorkbenchService::Judgment> judgments;
           for (const auto &item : body["decisions"]) {
             if (!item.is_object()) {
               throw bad_field("decisions", "must contain objects");
             }
             WorkbenchService::Judgment judgment;
             judgment.surface = required_string(item, "surface");
             try {
               judgment.verdict = parse_verdict(required_string(item, "verdict"));
             } catch (const Error &e) {
               throw bad_field("verdict", e.detail());
             }
             judgments.push_back(std::move(judgment));
           }
           send_json(res, 200,
                     session_to_json(svc.submit_feedback(req.matches[1].str(),
                                                         judgments)));
         }));

  s.Get(R"(/sessions/([^/]+)/export)",
        guarded([&svc](const auto &req, auto &res) {
          const DictionaryFormat format = format_param(req, "csv");
          const std::string id = req.matches[1].str();
          std::string bytes = svc.export_session(id, format);
          const bool is_json = format == DictionaryFormat::kJson;
          res.status = 200;
          res.set_header("Content-Disposition",
                         "attachment; filename=\"dictionary-" + id +
                             (is_json ? ".json\"" : ".csv\""));
          res.set_content(std::move(bytes),
                          is_json ? kJsonType : "text/csv; charset=utf-8");
        }));

  s.Post(R"(/sessions/([^/]+)/highlight)",
         guarded([&svc](const auto &req, auto &res) {
           const json body = parse_body(req);
           const std::string document = required_string(body, "document");
           HighlightOptions options;
           if (body.contains("options") && !body["options"].is_null()) {
             const json &opts = body["options"];
             if (!opts.is_object()) throw bad_field("options", "must be an object");
             options.case_insensitive =
                 optional_bool(opts, "case_insensitive").value_or(true);
             options.word_boundary =
                 optional_bool(opts, "word_boundary").value_or(true);
           }
           const std::string format =
               optional_string(body, "format").value_or("json");
           if (format != "json" && format != "html") {
             throw bad_field("format", "must be json or html");
           }
           const auto spans =
               svc.highlight_session(req.matches[1].str(), document, options);
           if (format == "html") {
             res.status = 200;
             res.set_content(
                 render_annotated(document, spans, AnnotationFormat::kHtml),
                 "text/html; charset=utf-8");
           } else {
             res.status = 200;
             res.set_content(
                 render_annotated(document, spans, AnnotationFormat::kJson),
                 kJsonType);
           }
         }));
}

}  // namespace seedforge
