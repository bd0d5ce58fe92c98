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

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cantomine/wiki/article.hpp"
#include "cantomine/wiki/langlinks.hpp"

namespace cantomine::wiki {

// Two articles on the same subject in different language editions. Links
// run target edition -> source edition (the smaller wiki links out to its
// counterpart), so link.from_title names the target article and
// link.to_title the source article.
struct ArticlePair {
  CleanArticle src_article;
  CleanArticle tgt_article;
  LangLink link;
};

struct PairingResult {
  std::vector<ArticlePair> pairs;
  std::size_t unmatched = 0;   // links with either endpoint missing
  std::size_t duplicates = 0;  // links reusing an already paired target
};

// Joins links against the two collections by exact title. Each target
// article lands in at most one pair (first link wins). Output is sorted by
// target title; target titles are unique in the output, so the order is
// total and downstream pair ids are reproducible.
inline PairingResult pair_articles(const std::vector<CleanArticle>& src,
                                   const std::vector<CleanArticle>& tgt,
                                   const std::vector<LangLink>& links) {
  std::unordered_map<std::string, std::size_t> src_index;
  std::unordered_map<std::string, std::size_t> tgt_index;
  src_index.reserve(src.size());
  tgt_index.reserve(tgt.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    src_index.emplace(src[i].title, i);  // first one wins
  }
  for (std::size_t i = 0; i < tgt.size(); ++i) {
    tgt_index.emplace(tgt[i].title, i);
  }
  PairingResult result;
  std::unordered_set<std::string> used_tgt;
  for (const LangLink& link : links) {
    auto t = tgt_index.find(link.from_title);
    auto s = src_index.find(link.to_title);
    if (s == src_index.end() || t == tgt_index.end()) {
      ++result.unmatched;
      continue;
    }
    if (!used_tgt.insert(link.from_title).second) {
      ++result.duplicates;
      continue;
    }
    result.pairs.push_back(ArticlePair{src[s->second], tgt[t->second], link});
  }
  std::sort(result.pairs.begin(), result.pairs.end(),
            [](const ArticlePair& a, const ArticlePair& b) {
              return a.tgt_article.title < b.tgt_article.title;
            });
  return result;
}

}  // namespace cantomine::wiki
