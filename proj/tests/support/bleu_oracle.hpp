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
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "cantomine/text/tokenize.hpp"

namespace cantomine::testsupport {

// Direct-formula corpus BLEU, kept deliberately naive: token-vector map
// keys, product of precisions under a fourth root. Used only to check the
// production implementation.
inline double oracle_corpus_bleu(const std::vector<text::TokenSequence>& hyps,
                                 const std::vector<text::TokenSequence>& refs) {
  auto grams = [](const text::TokenSequence& tokens, std::size_t n) {
    std::map<std::vector<std::string>, long long> counts;
    for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
      counts[std::vector<std::string>(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                                      tokens.begin() + static_cast<std::ptrdiff_t>(i + n))]++;
    }
    return counts;
  };
  double product = 1.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    long long matches = 0;
    long long total = 0;
    for (std::size_t i = 0; i < hyps.size(); ++i) {
      auto hyp_grams = grams(hyps[i], n);
      auto ref_grams = grams(refs[i], n);
      for (const auto& [gram, count] : hyp_grams) {
        total += count;
        auto it = ref_grams.find(gram);
        if (it != ref_grams.end()) matches += std::min(count, it->second);
      }
    }
    if (total == 0) continue;  // unattested order: vacuously perfect
    if (matches == 0) return 0.0;
    product *= static_cast<double>(matches) / static_cast<double>(total);
  }
  long long hyp_len = 0;
  long long ref_len = 0;
  for (const auto& h : hyps) hyp_len += static_cast<long long>(h.size());
  for (const auto& r : refs) ref_len += static_cast<long long>(r.size());
  if (hyp_len == 0) return 0.0;
  double bp = hyp_len > ref_len
                  ? 1.0
                  : std::exp(1.0 - static_cast<double>(ref_len) / static_cast<double>(hyp_len));
  return 100.0 * bp * std::pow(product, 0.25);
}

}  // namespace cantomine::testsupport
