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

#include <cstdint>
#include <string>
#include <vector>

namespace cantomine::wiki {

// One <page> element of a pages-articles dump, markup intact.
struct RawPage {
  std::int64_t page_id = 0;
  std::string title;
  int ns = 0;
  std::string wikitext;  // latest revision's text
  bool is_redirect = false;
};

// Markup-free article text. Paragraphs are normalized (NFC, collapsed
// whitespace) and nonempty.
struct CleanArticle {
  std::string lang;
  std::string title;
  std::vector<std::string> paragraphs;
};

}  // namespace cantomine::wiki
