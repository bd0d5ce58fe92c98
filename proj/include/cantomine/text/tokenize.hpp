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

using TokenSequence = std::vector<std::string>;

inline bool is_han(char32_t cp) {
  return (cp >= 0x4E00 && cp <= 0x9FFF) ||    // unified ideographs
         (cp >= 0x3400 && cp <= 0x4DBF) ||    // extension A
         (cp >= 0xF900 && cp <= 0xFAFF) ||    // compatibility ideographs
         (cp >= 0x20000 && cp <= 0x2EBEF) ||  // extensions B..F
         (cp >= 0x30000 && cp <= 0x3134A);    // extension G
}

inline bool is_latin_letter(char32_t cp) {
  if ((cp >= 'A' && cp <= 'Z') || (cp >= 'a' && cp <= 'z')) return true;
  if (cp >= 0xC0 && cp <= 0xFF) return cp != 0xD7 && cp != 0xF7;
  return cp >= 0x100 && cp <= 0x24F;
}

inline bool is_digit_char(char32_t cp) {
  return (cp >= '0' && cp <= '9') || (cp >= 0xFF10 && cp <= 0xFF19);
}

// Character-level tokenization for BLEU: a maximal run of Latin letters is
// one token, a maximal run of digits is one token, every other non-space
// codepoint (Han characters included) stands alone. Joining the tokens
// reproduces the input minus whitespace.
inline TokenSequence tokenize_for_bleu(std::string_view sentence) {
  TokenSequence tokens;
  std::string run;
  enum class Run { none, latin, digit } kind = Run::none;
  auto flush = [&] {
    if (!run.empty()) tokens.push_back(std::move(run));
    run.clear();
    kind = Run::none;
  };
  std::size_t i = 0;
  while (i < sentence.size()) {
    char32_t cp = utf8::decode(sentence, i);
    if (is_space(cp)) {
      flush();
    } else if (is_latin_letter(cp)) {
      if (kind != Run::latin) flush();
      kind = Run::latin;
      utf8::append(run, cp);
    } else if (is_digit_char(cp)) {
      if (kind != Run::digit) flush();
      kind = Run::digit;
      utf8::append(run, cp);
    } else {
      flush();
      std::string single;
      utf8::append(single, cp);
      tokens.push_back(std::move(single));
    }
  }
  flush();
  return tokens;
}

}  // namespace cantomine::text
