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

// HTTP client for the public ConceptNet API. Each (term, relation) question
// is one /query request for English start nodes, following pagination up to
// a fixed depth.

#ifndef AFFORDEX_CONCEPTNET_H_
#define AFFORDEX_CONCEPTNET_H_

#include <chrono>
#include <mutex>
#include <string>

#include "absl/status/statusor.h"
#include "affordex/knowledge.h"

namespace affordex {

inline constexpr char kConceptNetBase[] = "https://api.conceptnet.io";
// Environment variable overriding the API base URL.
inline constexpr char kConceptNetUrlEnv[] = "AFFORDEX_CONCEPTNET_URL";

// The base URL from the environment, or `fallback` when unset.
std::string ConceptNetBaseFromEnvironment(
    const std::string& fallback = kConceptNetBase);

struct ConceptNetOptions {
  std::string api_base = kConceptNetBase;
  int page_limit = 1000;
  int max_pages = 5;
  // Minimum spacing of consecutive requests.
  int rate_limit_ms = 1000;
  int timeout_seconds = 30;
};

// Keeps edges whose end node is English; the tail is the end node's label.
// Requests are serialized so the rate limit holds across threads.
class ConceptNetSource : public KnowledgeSource {
 public:
  explicit ConceptNetSource(ConceptNetOptions options);

  absl::StatusOr<std::vector<KnowledgeEdge>> Fetch(const std::string& term,
                                                   Relation relation) override;

  const ConceptNetOptions& options() const { return options_; }

 private:
  absl::StatusOr<std::string> Get(const std::string& path_and_query);

  ConceptNetOptions options_;
  std::string origin_;       // scheme://host[:port]
  std::string path_prefix_;  // path part of the base URL, without trailing /
  std::mutex mu_;
  std::chrono::steady_clock::time_point last_request_{};
  bool requested_ = false;
};

// Percent-encodes everything except unreserved characters and '/'.
std::string UrlEncode(std::string_view text);

}  // namespace affordex

#endif  // AFFORDEX_CONCEPTNET_H_
