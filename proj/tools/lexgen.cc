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

// Builds the bundled lexicons under data/ from raw inflection dumps.
//
//   affordex_lexgen <raw_dir> <stopwords.txt> <supplement.txt> <out_dir>
//
// <raw_dir> holds nouns_raw.tsv and verbs_raw.tsv (form, lemma, kind) as
// written by tools/scripts/export_lemminflect.py. Exception tables only list
// forms for which the suffix rules produce the wrong answer, so they shrink
// when the rules improve.

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "affordex/morphology.h"

namespace {

struct Row {
  std::string form;
  std::string lemma;
  std::string kind;
};

std::vector<Row> ReadRows(const std::string& path) {
  std::vector<Row> rows;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    size_t a = line.find('\t');
    size_t b = a == std::string::npos ? a : line.find('\t', a + 1);
    if (b == std::string::npos) continue;
    rows.push_back({line.substr(0, a), line.substr(a + 1, b - a - 1),
                    line.substr(b + 1)});
  }
  return rows;
}

std::string RegularPlural(const std::string& noun) {
  if (noun.ends_with("s") || noun.ends_with("x") || noun.ends_with("z") ||
      noun.ends_with("ch") || noun.ends_with("sh")) {
    return noun + "es";
  }
  return noun + "s";
}

std::set<std::string> ReadSet(const std::string& path) {
  std::set<std::string> words;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') words.insert(line);
  }
  return words;
}

void WriteList(const std::string& path, const std::set<std::string>& words,
               const std::string& header) {
  std::ofstream out(path);
  out << header << "\n";
  for (const auto& w : words) out << w << "\n";
}

void WriteMap(const std::string& path,
              const std::map<std::string, std::string>& map,
              const std::string& header) {
  std::ofstream out(path);
  out << header << "\n";
  for (const auto& [k, v] : map) out << k << "\t" << v << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 5) {
    std::cerr << "usage: affordex_lexgen <raw_dir> <stopwords> <supplement> "
                 "<out_dir>\n";
    return 1;
  }
  const std::string raw = argv[1];
  const std::set<std::string> stop = ReadSet(argv[2]);
  const std::string out = argv[4];
  std::vector<Row> noun_rows = ReadRows(raw + "/nouns_raw.tsv");
  for (const auto& extra : ReadSet(argv[3])) {
    noun_rows.push_back({extra, extra, "lemma"});
    noun_rows.push_back({RegularPlural(extra), extra, "plural"});
  }

  // Nouns: a form that is itself a lemma singularizes to itself.
  std::set<std::string> nouns;
  std::set<std::string> noun_lemmas;
  std::map<std::string, std::set<std::string>> plural_of;
  for (const Row& r : noun_rows) {
    if (stop.count(r.form)) continue;
    nouns.insert(r.form);
    if (r.kind == "lemma") {
      noun_lemmas.insert(r.form);
    } else {
      plural_of[r.form].insert(r.lemma);
    }
  }
  std::map<std::string, std::string> plural_exceptions;
  for (const auto& form : nouns) {
    std::string target = form;
    if (!noun_lemmas.count(form)) target = *plural_of[form].begin();
    if (affordex::SingularizeByRule(form) != target) {
      plural_exceptions[form] = target;
    }
  }

  // Verbs: a form that inflects some lemma maps to that lemma, even when it
  // is also a base form of its own ("found" -> "find", "lay" -> "lie").
  std::set<std::string> verbs;
  std::map<std::string, std::set<std::string>> inflection_of;
  for (const Row& r : ReadRows(raw + "/verbs_raw.tsv")) {
    verbs.insert(r.form);
    if (r.kind != "base") inflection_of[r.form].insert(r.lemma);
  }
  std::map<std::string, std::string> verb_exceptions;
  for (const auto& form : verbs) {
    std::string target = form;
    auto it = inflection_of.find(form);
    if (it != inflection_of.end()) target = *it->second.begin();
    if (affordex::BaseFormByRule(form) != target) {
      verb_exceptions[form] = target;
    }
  }

  WriteList(out + "/nouns.txt", nouns, "# english nouns, one per line");
  WriteList(out + "/verbs.txt", verbs, "# english verb forms, one per line");
  WriteMap(out + "/plural_exceptions.tsv", plural_exceptions,
           "# plural<TAB>singular, where suffix rules fail");
  WriteMap(out + "/verb_exceptions.tsv", verb_exceptions,
           "# inflected<TAB>base, where suffix rules fail");
  std::cout << "nouns " << nouns.size() << " (exceptions "
            << plural_exceptions.size() << "), verbs " << verbs.size()
            << " (exceptions " << verb_exceptions.size() << ")\n";
  return 0;
}
