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

// A local knowledge graph of extracted affordances. An object `affords` a
// verb; a two-object affordance additionally `requires` its second object.
// The subject of a requires-edge is the (object, verb) pair of the affords
// edge it qualifies, so every requires-edge names the affords-edge it
// depends on. Serialized as N-Triples with URN identifiers:
//
//   <urn:affordex:object:knife> <urn:affordex:affords> <urn:affordex:verb:slice> .
//   <urn:affordex:affordance:knife:slice> <urn:affordex:requires> <urn:affordex:object:tomato> .

#ifndef AFFORDEX_AFFORDANCE_GRAPH_H_
#define AFFORDEX_AFFORDANCE_GRAPH_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "affordex/commands.h"

namespace affordex {

enum class Predicate { kAffords, kRequires };

struct AffordanceTriple {
  Predicate predicate = Predicate::kAffords;
  std::string subject;  // object noun
  std::string verb;     // the afforded verb
  // The required noun of a requires-edge; empty for affords-edges, whose
  // object is `verb`.
  std::string required;

  auto operator<=>(const AffordanceTriple&) const = default;
};

// Single writer; readers may share a graph that is no longer modified.
class AffordanceGraph {
 public:
  AffordanceGraph() = default;

  // Idempotent; insertion order does not matter.
  void Insert(const Affordance& affordance);

  bool Affords(std::string_view object, std::string_view verb) const;
  bool Requires(std::string_view object, std::string_view verb,
                std::string_view required) const;

  const std::set<AffordanceTriple>& triples() const { return triples_; }
  size_t size() const { return triples_.size(); }

  // Header comment plus one sorted line per triple.
  std::string Serialize() const;

  // Fails with DataLoss on a malformed line or a requires-edge without its
  // affords-edge.
  static absl::StatusOr<AffordanceGraph> Parse(std::string_view content,
                                               std::string_view name);
  static absl::StatusOr<AffordanceGraph> Load(const std::string& path);
  absl::Status Export(const std::string& path) const;

  bool operator==(const AffordanceGraph&) const = default;

 private:
  std::set<AffordanceTriple> triples_;
};

}  // namespace affordex

#endif  // AFFORDEX_AFFORDANCE_GRAPH_H_
