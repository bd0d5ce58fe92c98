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

#include "cantomine/text/normalize.hpp"
#include "cantomine/unicode/utf8.hpp"

namespace cantomine::text {

// Sentence-terminal punctuation. Commas never split.
inline bool is_terminal(char32_t cp) {
  switch (cp) {
    case 0x3002:  // 。
    case 0xFF01:  // ！
    case 0xFF1F:  // ？
    case '!':
    case '?':
    case 0xFF1B:  // ；
    case ';':
    case 0x2026:  // …
      return true;
    default:
      return false;
  }
}

// Closing quotes/brackets that attach to the sentence they terminate.
inline bool is_closer(char32_t cp) {
  switch (cp) {
    case 0x300D:  // 」
    case 0x300F:  // 』
    case 0x201D:  // ”
    case 0x2019:  // ’
    case 0xFF09:  // ）
    case ')':
    case ']':
      return true;
    default:
      return false;
  }
}

// Splits a paragraph into sentences. A boundary sits after each maximal run
// of terminal marks together with any immediately following closing
// quotes/brackets; treating the whole run as one boundary keeps "！？" and
// "……" inside a single sentence. A trailing piece without a terminal is
// emitted as a final sentence. Pieces are trimmed; empty pieces dropped.
inline std::vector<std::string> segment(std::string_view paragraph) {
  std::vector<std::string> sentences;
  std::string current;
  auto flush = [&] {
    std::size_t b = 0, e = current.size();
    while (b < e && static_cast<unsigned char>(current[b]) == ' ') ++b;
    while (e > b && static_cast<unsigned char>(current[e - 1]) == ' ') --e;
    // Trim full whitespace set, not just ASCII space.
    std::string piece = current.substr(b, e - b);
    std::u32string cps = utf8::decode_all(piece);
    std::size_t cb = 0, ce = cps.size();
    while (cb < ce && is_space(cps[cb])) ++cb;
    while (ce > cb && is_space(cps[ce - 1])) --ce;
    if (ce > cb) sentences.push_back(utf8::encode(cps.substr(cb, ce - cb)));
    current.clear();
  };

  std::size_t i = 0;
  while (i < paragraph.size()) {
    char32_t cp = utf8::decode(paragraph, i);
    utf8::append(current, cp);
    if (!is_terminal(cp)) continue;
    // Extend through the rest of the terminal run and attached closers.
    while (i < paragraph.size()) {
      std::size_t peek = i;
      char32_t next = utf8::decode(paragraph, peek);
      if (!is_terminal(next) && !is_closer(next)) break;
      utf8::append(current, next);
      i = peek;
    }
    flush();
  }
  flush();
  return sentences;
}

}  // namespace cantomine::text
