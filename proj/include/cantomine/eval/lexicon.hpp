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
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cantomine/unicode/utf8.hpp"
#include "cantomine/util/errors.hpp"
#include "cantomine/util/tsv.hpp"

namespace cantomine::eval {

// Ordered phrase substitution table with unique, nonempty source phrases.
class Lexicon {
 public:
  void add(std::string source, std::string target) {
    if (source.empty() || target.empty()) {
      throw InvariantError("lexicon phrases must be nonempty");
    }
    auto it = index_.find(source);
    if (it != index_.end()) {
      entries_[it->second].second = std::move(target);  // later entry wins
      return;
    }
    index_.emplace(source, entries_.size());
    entries_.emplace_back(std::move(source), std::move(target));
  }

  const std::vector<std::pair<std::string, std::string>>& entries() const {
    return entries_;
  }

  bool empty() const { return entries_.empty(); }

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// The stock mapping table: particles, adverbs, pronouns, verbs, adjectives
// and nouns whose written-Chinese and written-Cantonese forms differ.
inline Lexicon default_lexicon() {
  Lexicon lexicon;
  lexicon.add("的", "o既");
  lexicon.add("地", "咁");
  lexicon.add("了", "o左");
  lexicon.add("不", "唔");
  lexicon.add("他們", "佢地");
  lexicon.add("他", "佢");
  lexicon.add("是", "係");
  lexicon.add("喜歡", "鍾意");
  lexicon.add("美麗", "靚");
  lexicon.add("冷", "凍");
  lexicon.add("小孩子", "細路仔");
  lexicon.add("椅子", "凳");
  return lexicon;
}

// TSV lexicon file: source_phrase <TAB> target_phrase per line. Entries are
// added in file order on top of whatever the lexicon already holds.
inline void load_lexicon(std::istream& in, Lexicon& lexicon) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = tsv::split_fields(line);
    if (cells.size() != 2 || cells[0].empty() || cells[1].empty()) {
      throw FormatError("lexicon line " + std::to_string(line_no) +
                        ": expected two nonempty tab-separated fields");
    }
    lexicon.add(tsv::unescape(cells[0], line_no),
                tsv::unescape(cells[1], line_no));
  }
}

// Left-to-right longest-match substitution. At each position the longest
// matching source phrase is replaced and scanning resumes after it;
// replacements are never rescanned. Positions advance by whole codepoints.
inline std::string lexicon_baseline(std::string_view source,
                                    const Lexicon& lexicon) {
  std::string out;
  out.reserve(source.size());
  std::size_t i = 0;
  while (i < source.size()) {
    const std::string* replacement = nullptr;
    std::size_t matched = 0;
    for (const auto& [from, to] : lexicon.entries()) {
      if (from.size() > matched &&
          source.compare(i, from.size(), from) == 0) {
        matched = from.size();
        replacement = &to;
      }
    }
    if (replacement != nullptr) {
      out += *replacement;
      i += matched;
      continue;
    }
    std::size_t next = i;
    utf8::decode(source, next);
    out.append(source.substr(i, next - i));
    i = next;
  }
  return out;
}

// The do-nothing translation system: output equals input.
inline std::vector<std::string> copy_baseline(
    const std::vector<std::string>& sources) {
  return sources;
}

}  // namespace cantomine::eval
