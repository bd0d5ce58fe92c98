// Copyright 2026 The Cantomine Authors.
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cantomine/util/errors.hpp"

namespace cantomine::tsv {

// Cell escaping: tab -> \t, newline -> \n, carriage return -> \r,
// backslash -> \\. Escaping the backslash is what makes the round trip
// exact.
inline std::string escape(std::string_view cell) {
  std::string out;
  out.reserve(cell.size());
  for (char c : cell) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string unescape(std::string_view cell, std::size_t line_no) {
  std::string out;
  out.reserve(cell.size());
  for (std::size_t i = 0; i < cell.size(); ++i) {
    char c = cell[i];
    if (c != '\\') {
      out += c;
      continue;
    }
    if (i + 1 >= cell.size()) {
      throw FormatError("tsv: dangling backslash at line " + std::to_string(line_no));
    }
    char e = cell[++i];
    switch (e) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case '\\': out += '\\'; break;
      default:
        throw FormatError("tsv: bad escape '\\" + std::string(1, e) + "' at line " +
                          std::to_string(line_no));
    }
  }
  return out;
}

// Raw split on tab; escaped tabs inside cells survive because they are
// two-character sequences at this point.
inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

}  // namespace cantomine::tsv
