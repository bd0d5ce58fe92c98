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
#include <vector>

#include "cantomine/text/normalize.hpp"
#include "cantomine/text/segment.hpp"

namespace cantomine::text {

// A normalized sentence, addressable by its origin inside an article.
struct Sentence {
  std::string text;
  std::string lang;
  std::string title;
  int paragraph_index = 0;
  int sentence_index = 0;  // within its paragraph

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Segments and normalizes a sequence of paragraphs into sentences.
// sentence_index restarts per paragraph; empty sentences are dropped.
inline std::vector<Sentence> extract_sentences(const std::vector<std::string>& paragraphs,
                                               const std::string& lang,
                                               const std::string& title,
                                               bool lowercase_ascii = false) {
  std::vector<Sentence> out;
  for (std::size_t p = 0; p < paragraphs.size(); ++p) {
    int s = 0;
    for (const std::string& piece : segment(paragraphs[p])) {
      std::string norm = normalize(piece, lowercase_ascii);
      if (norm.empty()) continue;
      out.push_back(Sentence{std::move(norm), lang, title, static_cast<int>(p), s++});
    }
  }
  return out;
}

}  // namespace cantomine::text
