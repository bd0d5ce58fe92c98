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
#include <map>
#include <string_view>
#include <vector>

#include "cantomine/embed/vector.hpp"
#include "cantomine/unicode/utf8.hpp"
#include "cantomine/util/fnv.hpp"

namespace cantomine::embed {

// Character n-gram counts hashed into a fixed number of buckets.
// The n-grams are codepoint windows of the normalized sentence (spaces
// included); the bucket of an n-gram is fnv1a64(utf8 bytes) % dim.
struct HashNgramSpec {
  int n_min = 1;
  int n_max = 3;
  std::uint32_t dim = 1u << 18;
};

inline std::uint32_t ngram_bucket(std::string_view ngram_utf8, std::uint32_t dim) {
  return static_cast<std::uint32_t>(fnv1a64(ngram_utf8) % dim);
}

inline EmbeddingVector embed_hash_ngram(std::string_view sentence, const HashNgramSpec& spec) {
  std::vector<std::size_t> offsets = utf8::codepoint_offsets(sentence);
  std::size_t n_cps = offsets.size() - 1;
  std::map<std::uint32_t, double> counts;  // ordered: entries come out sorted
  for (int n = spec.n_min; n <= spec.n_max; ++n) {
    if (n <= 0 || static_cast<std::size_t>(n) > n_cps) continue;
    for (std::size_t start = 0; start + n <= n_cps; ++start) {
      std::string_view gram =
          sentence.substr(offsets[start], offsets[start + n] - offsets[start]);
      counts[ngram_bucket(gram, spec.dim)] += 1.0;
    }
  }
  std::vector<EmbeddingVector::Entry> entries(counts.begin(), counts.end());
  return EmbeddingVector::from_sorted_entries(spec.dim, std::move(entries));
}

}  // namespace cantomine::embed
