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
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cantomine/text/tokenize.hpp"
#include "cantomine/util/errors.hpp"

namespace cantomine::eval {

struct BleuResult {
  double bleu = 0.0;  // 0..100
  std::array<double, 4> precisions{};
  double brevity_penalty = 1.0;
  std::size_t hyp_length = 0;
  std::size_t ref_length = 0;
  std::array<std::size_t, 4> matches{};
  std::array<std::size_t, 4> totals{};
};

namespace detail {

// n-gram key: tokens joined on a byte that cannot occur inside one.
inline std::unordered_map<std::string, std::size_t> ngram_counts(
    const text::TokenSequence& tokens, std::size_t n) {
  std::unordered_map<std::string, std::size_t> counts;
  if (tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key;
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) key.push_back('\x1f');
      key += tokens[i + k];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace detail

// Clipped n-gram matches and attempted n-grams, summed over the corpus.
// Each hypothesis n-gram may match at most as often as it occurs in the
// corresponding reference. Sentences shorter than n contribute nothing.
inline std::pair<std::size_t, std::size_t> modified_precision(
    const std::vector<text::TokenSequence>& hyps,
    const std::vector<text::TokenSequence>& refs, std::size_t n) {
  if (hyps.size() != refs.size()) {
    throw InvariantError("modified_precision: " + std::to_string(hyps.size()) +
                         " hypotheses vs " + std::to_string(refs.size()) +
                         " references");
  }
  if (n < 1 || n > 4) {
    throw InvariantError("modified_precision: order must be 1..4");
  }
  std::size_t matches = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    if (hyps[i].size() < n) continue;
    total += hyps[i].size() - n + 1;
    auto hyp_counts = detail::ngram_counts(hyps[i], n);
    auto ref_counts = detail::ngram_counts(refs[i], n);
    for (const auto& [gram, count] : hyp_counts) {
      auto it = ref_counts.find(gram);
      if (it == ref_counts.end()) continue;
      matches += std::min(count, it->second);
    }
  }
  return {matches, total};
}

// Corpus BLEU with uniform quarter weights over orders 1..4 and no
// smoothing: a zero precision at any attested order zeroes the whole
// score. An order with no attempted n-grams anywhere in the corpus (every
// sentence shorter than n) is vacuously perfect rather than zero, which
// keeps bleu(x, x) = 100 for corpora of short sentences. The brevity
// penalty uses total corpus lengths, 1 when the hypothesis side is longer,
// exp(1 - r/c) otherwise. A corpus with no hypothesis tokens at all scores
// 0 with brevity penalty 0.
inline BleuResult corpus_bleu(const std::vector<text::TokenSequence>& hyps,
                              const std::vector<text::TokenSequence>& refs) {
  if (hyps.empty()) {
    throw InvariantError("corpus_bleu: empty corpus");
  }
  if (hyps.size() != refs.size()) {
    throw InvariantError("corpus_bleu: " + std::to_string(hyps.size()) +
                         " hypotheses vs " + std::to_string(refs.size()) +
                         " references");
  }
  BleuResult result;
  for (const auto& h : hyps) result.hyp_length += h.size();
  for (const auto& r : refs) result.ref_length += r.size();
  bool all_positive = true;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto [matches, total] = modified_precision(hyps, refs, n);
    result.matches[n - 1] = matches;
    result.totals[n - 1] = total;
    result.precisions[n - 1] =
        total == 0 ? 1.0
                   : static_cast<double>(matches) / static_cast<double>(total);
    if (result.precisions[n - 1] <= 0.0) all_positive = false;
  }
  const double c = static_cast<double>(result.hyp_length);
  const double r = static_cast<double>(result.ref_length);
  if (result.hyp_length == 0) {
    result.brevity_penalty = 0.0;
  } else if (c > r) {
    result.brevity_penalty = 1.0;
  } else {
    result.brevity_penalty = std::exp(1.0 - r / c);
  }
  if (all_positive && result.brevity_penalty > 0.0) {
    double log_sum = 0.0;
    for (double p : result.precisions) log_sum += 0.25 * std::log(p);
    result.bleu = 100.0 * result.brevity_penalty * std::exp(log_sum);
  } else {
    result.bleu = 0.0;
  }
  return result;
}

// Convenience entry point over raw sentence strings.
inline BleuResult corpus_bleu_text(const std::vector<std::string>& hyps,
                                   const std::vector<std::string>& refs) {
  std::vector<text::TokenSequence> hyp_tokens;
  std::vector<text::TokenSequence> ref_tokens;
  hyp_tokens.reserve(hyps.size());
  ref_tokens.reserve(refs.size());
  for (const std::string& h : hyps) {
    hyp_tokens.push_back(text::tokenize_for_bleu(h));
  }
  for (const std::string& r : refs) {
    ref_tokens.push_back(text::tokenize_for_bleu(r));
  }
  return corpus_bleu(hyp_tokens, ref_tokens);
}

// Reporting format used everywhere a score is printed.
inline std::string format_bleu(double bleu) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", bleu);
  return buf;
}

}  // namespace cantomine::eval
