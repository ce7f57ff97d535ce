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

#include "affordex/affordance_graph.h"

#include <algorithm>

#include "affordex/io.h"
#include "affordex/status_macros.h"
#include "affordex/text.h"
#include "fmt/format.h"

namespace affordex {
namespace {

constexpr std::string_view kPrefix = "urn:affordex:";

std::string Iri(std::string_view kind, std::string_view a,
                std::string_view b = {}) {
  if (b.empty()) return fmt::format("<{}{}:{}>", kPrefix, kind, a);
  return fmt::format("<{}{}:{}:{}>", kPrefix, kind, a, b);
}

std::string Line(const AffordanceTriple& t) {
  if (t.predicate == Predicate::kAffords) {
    return fmt::format("{} {} {} .", Iri("object", t.subject),
                       fmt::format("<{}affords>", kPrefix),
                       Iri("verb", t.verb));
  }
  return fmt::format("{} {} {} .", Iri("affordance", t.subject, t.verb),
                     fmt::format("<{}requires>", kPrefix),
                     Iri("object", t.required));
}

// Splits "<urn:affordex:kind:a[:b]>" into its parts after the prefix.
std::optional<std::vector<std::string>> ParseIri(std::string_view term) {
  if (term.size() < 2 || term.front() != '<' || term.back() != '>') {
    return std::nullopt;
  }
  term = term.substr(1, term.size() - 2);
  if (term.substr(0, kPrefix.size()) != kPrefix) return std::nullopt;
  term.remove_prefix(kPrefix.size());
  std::vector<std::string> parts;
  size_t pos = 0;
  while (true) {
    size_t colon = term.find(':', pos);
    parts.emplace_back(term.substr(pos, colon - pos));
    if (parts.back().empty()) return std::nullopt;
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  return parts;
}

}  // namespace

void AffordanceGraph::Insert(const Affordance& affordance) {
  triples_.insert({Predicate::kAffords, affordance.object, affordance.verb, ""});
  if (affordance.second_object) {
    triples_.insert({Predicate::kRequires, affordance.object, affordance.verb,
                     *affordance.second_object});
  }
}

bool AffordanceGraph::Affords(std::string_view object,
                              std::string_view verb) const {
  return triples_.count({Predicate::kAffords, std::string(object),
                         std::string(verb), ""}) > 0;
}

bool AffordanceGraph::Requires(std::string_view object, std::string_view verb,
                               std::string_view required) const {
  return triples_.count({Predicate::kRequires, std::string(object),
                         std::string(verb), std::string(required)}) > 0;
}

std::string AffordanceGraph::Serialize() const {
  std::vector<std::string> lines;
  for (const auto& t : triples_) lines.push_back(Line(t));
  std::sort(lines.begin(), lines.end());
  std::string out = fmt::format("# affordex affordance graph, version {}\n",
                                AFFORDEX_VERSION);
  for (const auto& line : lines) {
    out += line;
    out.push_back('\n');
  }
  return out;
}

absl::StatusOr<AffordanceGraph> AffordanceGraph::Parse(std::string_view content,
                                                       std::string_view name) {
  AffordanceGraph graph;
  int line_number = 0;
  size_t pos = 0;
  while (pos < content.size()) {
    size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    std::vector<std::string> terms = SplitWords(line);
    if (terms.empty() || terms.front().front() == '#') continue;
    auto bad = [&](std::string_view why) {
      return absl::DataLossError(
          fmt::format("{}:{}: {}", name, line_number, why));
    };
    if (terms.size() != 4 || terms[3] != ".") return bad("expected a triple");
    auto s = ParseIri(terms[0]);
    auto p = ParseIri(terms[1]);
    auto o = ParseIri(terms[2]);
    if (!s || !p || !o || p->size() != 1) return bad("unexpected term");
    if ((*p)[0] == "affords") {
      if (s->size() != 2 || (*s)[0] != "object" || o->size() != 2 ||
          (*o)[0] != "verb") {
        return bad("affords links an object to a verb");
      }
      graph.triples_.insert({Predicate::kAffords, (*s)[1], (*o)[1], ""});
    } else if ((*p)[0] == "requires") {
      if (s->size() != 3 || (*s)[0] != "affordance" || o->size() != 2 ||
          (*o)[0] != "object") {
        return bad("requires links an affordance to an object");
      }
      graph.triples_.insert(
          {Predicate::kRequires, (*s)[1], (*s)[2], (*o)[1]});
    } else {
      return bad("unknown predicate");
    }
  }
  for (const auto& t : graph.triples_) {
    if (t.predicate == Predicate::kRequires && !graph.Affords(t.subject, t.verb)) {
      return absl::DataLossError(fmt::format(
          "{}: requires-edge of ({}, {}) has no affords-edge", name, t.subject,
          t.verb));
    }
  }
  return graph;
}

absl::StatusOr<AffordanceGraph> AffordanceGraph::Load(const std::string& path) {
  AFFORDEX_ASSIGN_OR_RETURN(std::string content, ReadFile(path));
  return Parse(content, path);
}

absl::Status AffordanceGraph::Export(const std::string& path) const {
  return WriteFile(path, Serialize());
}

}  // namespace affordex
