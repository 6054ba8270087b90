// Copyright 2026 The votescore Authors
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

// Helpers shared by the line-oriented input formats.

#ifndef VOTESCORE_SRC_TEXT_UTIL_HPP_
#define VOTESCORE_SRC_TEXT_UTIL_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <string_view>
#include <vector>

namespace votescore::text {

inline bool is_space(char ch) {
  return std::isspace(static_cast<unsigned char>(ch)) != 0;
}

// Non-empty, no whitespace, no '>'.
inline bool valid_name(std::string_view name) {
  return !name.empty() && std::none_of(name.begin(), name.end(), [](char ch) {
    return ch == '>' || is_space(ch);
  });
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_whitespace(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Line {
  std::size_t number;     // 1-based
  std::string_view text;  // trimmed
};

// Non-blank lines that are not `#` comments.
inline std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    const std::string_view line = trim(text.substr(start, end - start));
    if (!line.empty() && line.front() != '#') lines.push_back({number, line});
    start = end + 1;
  }
  return lines;
}

}  // namespace votescore::text

#endif  // VOTESCORE_SRC_TEXT_UTIL_HPP_
