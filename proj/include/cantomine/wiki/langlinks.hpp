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

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "cantomine/text/normalize.hpp"

namespace cantomine::wiki {

// Cross-language article link: the title an article carries in the source
// wiki and the title of its counterpart in the target wiki.
struct LangLink {
  std::string from_title;
  std::string to_title;
};

struct LangLinkLoad {
  std::vector<LangLink> links;
  std::size_t malformed = 0;   // skipped lines or tuples
  std::size_t duplicates = 0;  // repeated from_title, first kept
};

namespace detail {

inline void push_link(LangLinkLoad& load,
                      std::unordered_set<std::string>& seen, std::string from,
                      std::string to) {
  from = text::normalize(from);
  to = text::normalize(to);
  if (from.empty() || to.empty()) {
    ++load.malformed;
    return;
  }
  if (!seen.insert(from).second) {
    ++load.duplicates;
    return;
  }
  load.links.push_back(LangLink{std::move(from), std::move(to)});
}

}  // namespace detail

// Tab-separated link table: from_title <TAB> to_title, one link per line.
// Lines that do not have exactly two nonempty fields are counted as
// malformed and skipped with a warning.
inline LangLinkLoad load_langlinks_tsv(std::istream& in,
                                       std::ostream* warnings = nullptr) {
  LangLinkLoad load;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos ||
        line.find('\t', tab + 1) != std::string::npos) {
      ++load.malformed;
      if (warnings != nullptr) {
        *warnings << "warning: langlinks line " << line_no
                  << ": expected two tab-separated fields\n";
      }
      continue;
    }
    std::size_t before = load.malformed;
    detail::push_link(load, seen, line.substr(0, tab), line.substr(tab + 1));
    if (warnings != nullptr && load.malformed > before) {
      *warnings << "warning: langlinks line " << line_no << ": empty field\n";
    }
  }
  return load;
}

// SQL dump of a langlinks table. Tuples look like
//   ('from title','lang','to title')
// inside INSERT statements; only tuples whose language code matches
// `lang_code` are kept. String values use MySQL backslash escapes.
inline LangLinkLoad load_langlinks_sql(std::istream& in,
                                       std::string_view lang_code,
                                       std::ostream* warnings = nullptr) {
  LangLinkLoad load;
  std::unordered_set<std::string> seen;
  std::string stmt;
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("INSERT", 0) != 0 && line.rfind("insert", 0) != 0) continue;
    std::size_t open = line.find('(');
    if (open == std::string::npos) continue;
    std::string_view rest = std::string_view(line).substr(open);
    std::size_t i = 0;
    const std::size_t n = rest.size();
    while (i < n) {
      if (rest[i] != '(') {
        ++i;
        continue;
      }
      ++i;
      std::vector<std::string> fields;
      std::string field;
      bool bad = false;
      for (;;) {
        while (i < n && rest[i] == ' ') ++i;
        if (i >= n) {
          bad = true;
          break;
        }
        if (rest[i] == '\'') {
          ++i;
          field.clear();
          bool closed = false;
          while (i < n) {
            char c = rest[i];
            if (c == '\\' && i + 1 < n) {
              char e = rest[i + 1];
              switch (e) {
                case 'n': field.push_back('\n'); break;
                case 't': field.push_back('\t'); break;
                case 'r': field.push_back('\r'); break;
                case '0': field.push_back('\0'); break;
                case 'Z': field.push_back('\x1a'); break;
                case 'b': field.push_back('\b'); break;
                default: field.push_back(e); break;
              }
              i += 2;
              continue;
            }
            if (c == '\'') {
              // A doubled quote is an escaped literal quote.
              if (i + 1 < n && rest[i + 1] == '\'') {
                field.push_back('\'');
                i += 2;
                continue;
              }
              ++i;
              closed = true;
              break;
            }
            field.push_back(c);
            ++i;
          }
          if (!closed) {
            bad = true;
            break;
          }
          fields.push_back(field);
        } else {
          field.clear();
          while (i < n && rest[i] != ',' && rest[i] != ')') {
            field.push_back(rest[i]);
            ++i;
          }
          fields.push_back(field);
        }
        while (i < n && rest[i] == ' ') ++i;
        if (i < n && rest[i] == ',') {
          ++i;
          continue;
        }
        if (i < n && rest[i] == ')') {
          ++i;
          break;
        }
        bad = true;
        break;
      }
      if (bad || fields.size() != 3) {
        ++load.malformed;
        if (warnings != nullptr) {
          *warnings << "warning: skipping malformed langlinks tuple\n";
        }
        continue;
      }
      if (fields[1] != lang_code) continue;
      detail::push_link(load, seen, std::move(fields[0]),
                        std::move(fields[2]));
    }
  }
  return load;
}

}  // namespace cantomine::wiki
