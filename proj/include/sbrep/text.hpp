// Copyright 2026 The Authors.
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

#ifndef SBREP_TEXT_HPP_
#define SBREP_TEXT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "sbrep/error.hpp"

namespace sbrep {

inline std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r'))
      ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r')
      ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

// Splits a whole file into token lines. A single trailing newline is
// allowed; blank lines elsewhere are content errors at the caller.
inline std::vector<std::vector<std::string>> split_lines_tokens(
    std::string_view text) {
  std::vector<std::vector<std::string>> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = (nl == std::string_view::npos)
                                ? text.substr(pos)
                                : text.substr(pos, nl - pos);
    bool last = nl == std::string_view::npos;
    if (!(last && line.empty())) out.push_back(split_tokens(line));
    if (last) break;
    pos = nl + 1;
  }
  return out;
}

inline int parse_count(const std::string& token, const std::string& what) {
  if (token.empty()) fail(ErrorCode::kParse, "missing " + what);
  long value = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9')
      fail(ErrorCode::kParse, "bad " + what + " '" + token + "'");
    value = value * 10 + (ch - '0');
    if (value > 1000000) fail(ErrorCode::kParse, what + " too large");
  }
  return static_cast<int>(value);
}

inline int parse_int(const std::string& token, const std::string& what) {
  bool neg = !token.empty() && token[0] == '-';
  int v = parse_count(neg ? token.substr(1) : token, what);
  return neg ? -v : v;
}

}  // namespace sbrep

#endif  // SBREP_TEXT_HPP_
