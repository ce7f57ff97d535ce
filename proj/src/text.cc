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

#include "affordex/text.h"

#include <cctype>

namespace affordex {

namespace {

bool IsAsciiAlpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

char AsciiLower(char c) { return (c >= 'A' && c <= 'Z') ? c - 'A' + 'a' : c; }

}  // namespace

std::string AsciiLowercase(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = AsciiLower(c);
  return out;
}

std::string CanonicalSpacing(std::string_view text) {
  return JoinWords(SplitWords(AsciiLowercase(text)));
}

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    size_t start = i;
    while (i < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    if (i > start) words.emplace_back(text.substr(start, i - start));
  }
  return words;
}

std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    pos = end + 1;
  }
  return lines;
}

std::string JoinWords(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

bool HasAlpha(std::string_view text) {
  for (char c : text) {
    if (IsAsciiAlpha(c)) return true;
  }
  return false;
}

bool IsLowerAlpha(std::string_view text) {
  if (text.empty()) return false;
  for (char c : text) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

std::vector<WordToken> TokenizeWords(std::string_view text) {
  std::vector<WordToken> tokens;
  bool boundary = true;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (IsAsciiAlpha(c)) {
      size_t start = i;
      while (i < text.size() &&
             IsAsciiAlpha(text[i])) {
        ++i;
      }
      WordToken token;
      token.surface = std::string(text.substr(start, i - start));
      token.text = AsciiLowercase(token.surface);
      token.boundary_before = boundary;
      tokens.push_back(std::move(token));
      boundary = false;
      continue;
    }
    if (c != ' ' && c != '\t' && c != '-') boundary = true;
    ++i;
  }
  return tokens;
}

}  // namespace affordex
