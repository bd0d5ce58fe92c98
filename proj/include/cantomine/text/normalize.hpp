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

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include "cantomine/unicode/utf8.hpp"
#include "cantomine/util/errors.hpp"

namespace cantomine::text {

// Whitespace for collapsing purposes. U+3000 (ideographic space) matters for
// Chinese text; the rest is the usual Unicode White_Space set.
inline bool is_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680:
    case 0x2028: case 0x2029: case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

// Non-whitespace control characters are dropped outright by normalize().
inline bool is_control(char32_t cp) {
  return cp < 0x20 || cp == 0x7F || (cp >= 0x80 && cp <= 0x9F);
}

inline std::string nfc(std::string_view s) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* norm = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) {
    throw FormatError("icu: cannot obtain NFC normalizer");
  }
  icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(s.data(), static_cast<int32_t>(s.size())));
  icu::UnicodeString normalized = norm->normalize(in, status);
  if (U_FAILURE(status)) {
    throw FormatError("icu: NFC normalization failed");
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

// Canonical sentence/paragraph text: controls dropped, each whitespace run
// collapsed to one ASCII space, leading/trailing whitespace removed, then
// NFC. The collapse pass runs first: removing a control character after
// composition could expose a base+mark pair that a second pass would
// compose, and normalize must be idempotent. Canonical compositions never
// produce whitespace or controls, so NFC cannot disturb the collapsed shape.
inline std::string normalize(std::string_view raw, bool lowercase_ascii = false) {
  std::string collapsed;
  collapsed.reserve(raw.size());
  bool pending_space = false;
  std::size_t i = 0;
  while (i < raw.size()) {
    char32_t cp = utf8::decode(raw, i);
    if (is_space(cp)) {
      pending_space = !collapsed.empty();
      continue;
    }
    if (is_control(cp) || cp == 0xFEFF) {
      continue;
    }
    if (pending_space) {
      collapsed += ' ';
      pending_space = false;
    }
    if (lowercase_ascii && cp >= 'A' && cp <= 'Z') cp += 0x20;
    utf8::append(collapsed, cp);
  }
  return nfc(collapsed);
}

}  // namespace cantomine::text
