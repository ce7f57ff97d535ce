// Copyright 2026 The Affordex Authors.
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

#include "affordex/annotation_server.h"

#include "affordex/status_macros.h"
#include "fmt/format.h"
#include "httplib.h"
#include "json.hpp"

namespace affordex {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

int HttpStatus(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kNotFound: return 404;
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kFailedPrecondition:
    case absl::StatusCode::kDataLoss: return 400;
    default: return 500;
  }
}

void Reply(httplib::Response& res, int status, const OrderedJson& body) {
  res.status = status;
  res.set_header("Access-Control-Allow-Origin", "*");
  res.set_content(body.dump() + "\n", "application/json");
}

void ReplyError(httplib::Response& res, const absl::Status& status) {
  OrderedJson body;
  body["error"] = StatusText(status);
  Reply(res, HttpStatus(status), body);
}

absl::StatusOr<Json> ParseBody(const httplib::Request& req) {
  try {
    Json body = Json::parse(req.body);
    if (!body.is_object()) throw std::invalid_argument("not an object");
    return body;
  } catch (const std::exception& e) {
    return absl::InvalidArgumentError(
        fmt::format("request body is not a JSON object: {}", e.what()));
  }
}

OrderedJson CountsJson(const LabelCounts& c) {
  OrderedJson j;
  j["A"] = c.a;
  j["B"] = c.b;
  j["C"] = c.c;
  j["total"] = c.total();
  j["unlabeled"] = c.unlabeled;
  j["functional_percent"] = c.FunctionalPercent();
  return j;
}

absl::StatusOr<std::string> CreateFromRequest(AnnotationService& service,
                                              const Json& body) {
  try {
    std::string annotator = body.at("annotator_id").get<std::string>();
    std::vector<ScenarioTrace> traces;
    for (const auto& path : body.at("traces")) {
      AFFORDEX_ASSIGN_OR_RETURN(ScenarioTrace trace,
                                LoadTrace(path.get<std::string>()));
      traces.push_back(std::move(trace));
    }
    AFFORDEX_ASSIGN_OR_RETURN(
        std::vector<StepCommandList> commands,
        LoadCommandLists(body.at("commands").get<std::string>()));
    return service.CreateSession(traces, commands, annotator);
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(
        fmt::format("bad session request: {}", e.what()));
  }
}

}  // namespace

AnnotationServer::AnnotationServer(AnnotationService& service)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
  httplib::Server& s = *server_;

  s.Post("/sessions", [this](const httplib::Request& req,
                             httplib::Response& res) {
    auto body = ParseBody(req);
    if (!body.ok()) return ReplyError(res, body.status());
    auto id = CreateFromRequest(service_, *body);
    if (!id.ok()) return ReplyError(res, id.status());
    auto queue = service_.Queue(*id);
    OrderedJson out;
    out["session_id"] = *id;
    out["items"] = queue.ok() ? queue->size() : 0;
    Reply(res, 201, out);
  });

  s.Get(R"(/sessions/([^/]+)/next)", [this](const httplib::Request& req,
                                            httplib::Response& res) {
    std::string annotator = req.get_param_value("annotator");
    if (annotator.empty()) {
      return ReplyError(res,
                        absl::InvalidArgumentError("missing ?annotator="));
    }
    auto next = service_.Next(req.matches[1], annotator);
    if (!next.ok()) return ReplyError(res, next.status());
    OrderedJson out;
    out["done"] = next->done;
    out["total"] = next->total;
    if (!next->done) {
      out["game_id"] = next->item.step_ref.game_id;
      out["step_index"] = next->item.step_ref.step_index;
      out["command"] = next->item.command_text;
      out["position"] = next->position;
      out["context"] = next->context;
      out["step_commands"] = next->step_commands;
    }
    Reply(res, 200, out);
  });

  s.Post(R"(/sessions/([^/]+)/labels)", [this](const httplib::Request& req,
                                               httplib::Response& res) {
    auto body = ParseBody(req);
    if (!body.ok()) return ReplyError(res, body.status());
    absl::StatusOr<AnnotationRecord> record;
    try {
      StepRef ref{body->at("game_id").get<std::string>(),
                  body->at("step_index").get<int>()};
      record = service_.SubmitLabel(
          req.matches[1], body->at("annotator_id").get<std::string>(), ref,
          body->at("command").get<std::string>(),
          body->at("category").get<std::string>());
    } catch (const Json::exception& e) {
      record = absl::InvalidArgumentError(
          fmt::format("bad label request: {}", e.what()));
    }
    if (!record.ok()) return ReplyError(res, record.status());
    OrderedJson out;
    out["session_id"] = record->session_id;
    out["game_id"] = record->step_ref.game_id;
    out["step_index"] = record->step_ref.step_index;
    out["command"] = record->command_text;
    out["category"] = std::string(CategoryName(record->category));
    out["annotator_id"] = record->annotator_id;
    out["timestamp"] = record->timestamp;
    Reply(res, 200, out);
  });

  s.Get(R"(/sessions/([^/]+)/aggregate)", [this](const httplib::Request& req,
                                                 httplib::Response& res) {
    std::optional<std::string> annotator;
    if (req.has_param("annotator")) {
      annotator = req.get_param_value("annotator");
    }
    auto summary = service_.AggregateLabels(req.matches[1], annotator);
    if (!summary.ok()) return ReplyError(res, summary.status());
    OrderedJson out;
    out["annotator_id"] = summary->annotator_id;
    OrderedJson games = OrderedJson::array();
    for (const auto& [game, counts] : summary->per_game) {
      OrderedJson row = CountsJson(counts);
      row["game"] = game;
      games.push_back(std::move(row));
    }
    out["per_game"] = std::move(games);
    out["overall"] = CountsJson(summary->overall);
    Reply(res, 200, out);
  });

  s.Get(R"(/sessions/([^/]+)/labels\.csv)", [this](const httplib::Request& req,
                                                   httplib::Response& res) {
    auto csv = service_.ExportLabels(req.matches[1]);
    if (!csv.ok()) return ReplyError(res, csv.status());
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(*csv, "text/csv");
  });

  s.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

AnnotationServer::~AnnotationServer() = default;

int AnnotationServer::Bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool AnnotationServer::Serve() { return server_->listen_after_bind(); }

void AnnotationServer::Stop() { server_->stop(); }

}  // namespace affordex
