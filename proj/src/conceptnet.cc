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

#include "affordex/conceptnet.h"

#include <cctype>
#include <cstdlib>
#include <thread>

#include "affordex/status_macros.h"
#include "fmt/format.h"
#include "httplib.h"
#include "json.hpp"

namespace affordex {
namespace {

using Json = nlohmann::json;

bool IsEnglishNode(const Json& node) {
  if (!node.is_object()) return false;
  auto lang = node.find("language");
  if (lang != node.end() && lang->is_string()) return *lang == "en";
  auto id = node.find("@id");
  return id != node.end() && id->is_string() &&
         id->get<std::string>().rfind("/c/en/", 0) == 0;
}

}  // namespace

std::string ConceptNetBaseFromEnvironment(const std::string& fallback) {
  const char* value = std::getenv(kConceptNetUrlEnv);
  if (value == nullptr || *value == '\0') return fallback;
  return value;
}

std::string UrlEncode(std::string_view text) {
  std::string out;
  for (unsigned char c : text) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~' ||
        c == '/') {
      out.push_back(static_cast<char>(c));
    } else {
      out += fmt::format("%{:02X}", c);
    }
  }
  return out;
}

ConceptNetSource::ConceptNetSource(ConceptNetOptions options)
    : options_(std::move(options)) {
  std::string base = options_.api_base;
  while (!base.empty() && base.back() == '/') base.pop_back();
  size_t scheme = base.find("://");
  size_t path = base.find('/', scheme == std::string::npos ? 0 : scheme + 3);
  origin_ = base.substr(0, path);
  if (path != std::string::npos) path_prefix_ = base.substr(path);
}

absl::StatusOr<std::string> ConceptNetSource::Get(
    const std::string& path_and_query) {
  std::lock_guard<std::mutex> lock(mu_);
  if (requested_ && options_.rate_limit_ms > 0) {
    auto next = last_request_ + std::chrono::milliseconds(options_.rate_limit_ms);
    std::this_thread::sleep_until(next);
  }
  httplib::Client client(origin_);
  client.set_connection_timeout(options_.timeout_seconds, 0);
  client.set_read_timeout(options_.timeout_seconds, 0);
  client.set_follow_location(true);
  auto response = client.Get(path_prefix_ + path_and_query);
  last_request_ = std::chrono::steady_clock::now();
  requested_ = true;
  if (!response) {
    return absl::UnavailableError(
        fmt::format("request to {} failed: {}", origin_,
                    httplib::to_string(response.error())));
  }
  if (response->status != 200) {
    return absl::UnavailableError(
        fmt::format("{} answered HTTP {}", origin_, response->status));
  }
  return response->body;
}

absl::StatusOr<std::vector<KnowledgeEdge>> ConceptNetSource::Fetch(
    const std::string& term, Relation relation) {
  std::vector<KnowledgeEdge> edges;
  std::string next = fmt::format(
      "/query?start=/c/en/{}&rel=/r/{}&limit={}", UrlEncode(term),
      RelationName(relation), options_.page_limit);
  for (int page = 0; page < options_.max_pages && !next.empty(); ++page) {
    AFFORDEX_ASSIGN_OR_RETURN(std::string body, Get(next));
    next.clear();
    Json document;
    try {
      document = Json::parse(body);
    } catch (const Json::exception& e) {
      return absl::UnavailableError(
          fmt::format("unreadable answer for '{}': {}", term, e.what()));
    }
    auto list = document.find("edges");
    if (list != document.end() && list->is_array()) {
      for (const auto& item : *list) {
        if (!item.is_object()) continue;
        const Json& end = item.value("end", Json());
        if (!IsEnglishNode(end)) continue;
        std::string label = end.value("label", "");
        if (label.empty()) continue;
        KnowledgeEdge edge;
        edge.subject = term;
        edge.relation = relation;
        edge.tail_text = std::move(label);
        edge.weight = item.value("weight", 1.0);
        // Negative weights mark refuted assertions.
        if (edge.weight < 0) continue;
        edge.source = EdgeSource::kLiveApi;
        edges.push_back(std::move(edge));
      }
    }
    auto view = document.find("view");
    if (view != document.end() && view->is_object()) {
      auto next_page = view->find("nextPage");
      if (next_page != view->end() && next_page->is_string()) {
        next = next_page->get<std::string>();
        // Pages link with absolute paths on the API host.
        if (!path_prefix_.empty() && next.rfind(path_prefix_, 0) == 0) {
          next = next.substr(path_prefix_.size());
        }
      }
    }
  }
  return edges;
}

}  // namespace affordex
