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
#include <atomic>
#include <cstddef>
#include <exception>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "cantomine/embed/embedder.hpp"
#include "cantomine/text/sentence.hpp"
#include "cantomine/text/tokenize.hpp"
#include "cantomine/unicode/utf8.hpp"
#include "cantomine/util/errors.hpp"
#include "cantomine/wiki/pairing.hpp"

namespace cantomine::mine {

struct ScoredSentencePair {
  text::Sentence src;
  text::Sentence tgt;
  double score = 0.0;
  std::size_t article_pair_id = 0;

  bool operator==(const ScoredSentencePair&) const = default;
};

using MinedCorpus = std::vector<ScoredSentencePair>;

enum class DedupScope { per_article_pair, global };

struct MiningConfig {
  double threshold = 0.93;
  bool digit_filter = true;
  DedupScope dedup_scope = DedupScope::per_article_pair;
  std::size_t min_tokens = 0;

  void validate() const {
    if (threshold < 0.0 || threshold > 1.0) {
      throw InvariantError("mining threshold must be in [0,1]");
    }
  }
};

// Every cross-language sentence combination in one article pair, scored by
// embedding cosine. Sentences the embedder cannot represent (zero vector or
// missing from an external table) are skipped, as are sentences shorter
// than min_tokens when that is positive.
inline std::vector<ScoredSentencePair> score_article_pair(
    const wiki::ArticlePair& pair, const embed::Embedder& embedder,
    std::size_t article_pair_id, std::size_t min_tokens = 0) {
  auto embed_side = [&](const wiki::CleanArticle& article)
      -> std::vector<std::pair<text::Sentence, embed::EmbeddingVector>> {
    std::vector<std::pair<text::Sentence, embed::EmbeddingVector>> side;
    for (text::Sentence& s :
         text::extract_sentences(article.paragraphs, article.lang,
                                 article.title)) {
      if (min_tokens > 0 &&
          text::tokenize_for_bleu(s.text).size() < min_tokens) {
        continue;
      }
      auto vec = embedder(s.text);
      if (!vec.has_value()) continue;
      side.emplace_back(std::move(s), std::move(*vec));
    }
    return side;
  };
  auto src_side = embed_side(pair.src_article);
  auto tgt_side = embed_side(pair.tgt_article);
  std::vector<ScoredSentencePair> scored;
  scored.reserve(src_side.size() * tgt_side.size());
  for (const auto& [src, src_vec] : src_side) {
    for (const auto& [tgt, tgt_vec] : tgt_side) {
      scored.push_back(ScoredSentencePair{
          src, tgt, embed::cosine(src_vec, tgt_vec), article_pair_id});
    }
  }
  return scored;
}

// Threshold is inclusive: a pair scoring exactly the threshold is kept.
inline std::vector<ScoredSentencePair> select_pairs(
    std::vector<ScoredSentencePair> pairs, double threshold) {
  std::erase_if(pairs, [threshold](const ScoredSentencePair& p) {
    return p.score < threshold;
  });
  return pairs;
}

inline std::vector<ScoredSentencePair> remove_identical(
    std::vector<ScoredSentencePair> pairs) {
  std::erase_if(pairs, [](const ScoredSentencePair& p) {
    return p.src.text == p.tgt.text;
  });
  return pairs;
}

namespace detail {

// Preference order inside one source-sentence group: highest score wins;
// ties fall to the smallest target text, then the earliest target position,
// then the smallest article pair id.
inline bool better_candidate(const ScoredSentencePair& a,
                             const ScoredSentencePair& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.tgt.text != b.tgt.text) return a.tgt.text < b.tgt.text;
  if (a.tgt.paragraph_index != b.tgt.paragraph_index) {
    return a.tgt.paragraph_index < b.tgt.paragraph_index;
  }
  if (a.tgt.sentence_index != b.tgt.sentence_index) {
    return a.tgt.sentence_index < b.tgt.sentence_index;
  }
  return a.article_pair_id < b.article_pair_id;
}

}  // namespace detail

// Keep-max deduplication by source sentence text. Scope decides whether
// "same source" is judged within one article pair or across the whole
// corpus. Output comes back grouped by (article_pair_id, src.text).
inline std::vector<ScoredSentencePair> dedup_by_source(
    const std::vector<ScoredSentencePair>& pairs, DedupScope scope) {
  std::map<std::pair<std::size_t, std::string>, const ScoredSentencePair*>
      best;
  for (const ScoredSentencePair& p : pairs) {
    std::size_t group =
        scope == DedupScope::per_article_pair ? p.article_pair_id : 0;
    auto key = std::make_pair(group, p.src.text);
    auto [it, inserted] = best.try_emplace(key, &p);
    if (!inserted && detail::better_candidate(p, *it->second)) {
      it->second = &p;
    }
  }
  std::vector<ScoredSentencePair> kept;
  kept.reserve(best.size());
  for (const auto& [key, p] : best) kept.push_back(*p);
  return kept;
}

// Maximal digit runs in document order, fullwidth digits folded to ASCII.
inline std::vector<std::string> digit_runs(std::string_view text) {
  std::vector<std::string> runs;
  std::string run;
  std::size_t i = 0;
  while (i < text.size()) {
    char32_t cp = utf8::decode(text, i);
    char digit = 0;
    if (cp >= U'0' && cp <= U'9') {
      digit = static_cast<char>(cp);
    } else if (cp >= 0xFF10 && cp <= 0xFF19) {
      digit = static_cast<char>('0' + (cp - 0xFF10));
    }
    if (digit != 0) {
      run.push_back(digit);
    } else if (!run.empty()) {
      runs.push_back(std::move(run));
      run.clear();
    }
  }
  if (!run.empty()) runs.push_back(std::move(run));
  return runs;
}

// A pair survives only when both sides carry the same sequence of digit
// runs. "2017年2月27日" vs "2017年2月3號" disagree on the third run and
// the pair is dropped.
inline std::vector<ScoredSentencePair> digit_consistency_filter(
    std::vector<ScoredSentencePair> pairs) {
  std::erase_if(pairs, [](const ScoredSentencePair& p) {
    return digit_runs(p.src.text) != digit_runs(p.tgt.text);
  });
  return pairs;
}

namespace detail {

inline std::vector<ScoredSentencePair> stage_article_pair(
    const wiki::ArticlePair& pair, const embed::Embedder& embedder,
    const MiningConfig& config, std::size_t article_pair_id) {
  auto pairs = score_article_pair(pair, embedder, article_pair_id,
                                  config.min_tokens);
  pairs = select_pairs(std::move(pairs), config.threshold);
  pairs = remove_identical(std::move(pairs));
  pairs = dedup_by_source(pairs, DedupScope::per_article_pair);
  if (config.digit_filter) {
    pairs = digit_consistency_filter(std::move(pairs));
  }
  return pairs;
}

inline void sort_mined(std::vector<ScoredSentencePair>& pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const ScoredSentencePair& a, const ScoredSentencePair& b) {
              if (a.article_pair_id != b.article_pair_id) {
                return a.article_pair_id < b.article_pair_id;
              }
              if (a.score != b.score) return a.score > b.score;
              if (a.src.text != b.src.text) return a.src.text < b.src.text;
              return a.tgt.text < b.tgt.text;
            });
}

// Runs fn(i) for i in [0, n) on up to `workers` threads. Results land in
// index-addressed slots, so scheduling order cannot leak into output order.
template <typename Fn>
void for_each_index(std::size_t n, std::size_t workers, Fn fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto run = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  std::size_t count = std::min(workers, n);
  pool.reserve(count);
  for (std::size_t t = 0; t < count; ++t) pool.emplace_back(run);
  for (std::thread& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace detail

// Full pipeline over all article pairs: score, select, drop identical,
// keep-max dedup per article pair, digit filter, then an optional global
// dedup after the per-pair results are concatenated. Article pair ids are
// input positions. Output ordering is fixed by (article_pair_id,
// descending score, src.text), independent of worker count.
inline MinedCorpus mine_corpus(const std::vector<wiki::ArticlePair>& pairs,
                               const embed::Embedder& embedder,
                               const MiningConfig& config,
                               std::size_t workers = 1) {
  config.validate();
  std::vector<std::vector<ScoredSentencePair>> staged(pairs.size());
  detail::for_each_index(pairs.size(), workers, [&](std::size_t i) {
    staged[i] = detail::stage_article_pair(pairs[i], embedder, config, i);
  });
  MinedCorpus merged;
  for (auto& part : staged) {
    merged.insert(merged.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  if (config.dedup_scope == DedupScope::global) {
    merged = dedup_by_source(merged, DedupScope::global);
  }
  detail::sort_mined(merged);
  return merged;
}

struct SweepRow {
  double threshold = 0.0;
  std::size_t count = 0;
};

// Mined-corpus sizes across thresholds. The digit filter stays off here so
// the raw threshold-versus-yield curve is visible; everything else matches
// mine_corpus, and scoring work is shared across thresholds.
inline std::vector<SweepRow> threshold_sweep(
    const std::vector<wiki::ArticlePair>& pairs,
    const embed::Embedder& embedder, const std::vector<double>& thresholds,
    const MiningConfig& config, std::size_t workers = 1) {
  if (thresholds.empty()) {
    throw InvariantError("threshold sweep needs at least one threshold");
  }
  for (double t : thresholds) {
    if (t < 0.0 || t > 1.0) {
      throw InvariantError("sweep threshold must be in [0,1]");
    }
  }
  std::vector<std::vector<ScoredSentencePair>> scored(pairs.size());
  detail::for_each_index(pairs.size(), workers, [&](std::size_t i) {
    scored[i] =
        score_article_pair(pairs[i], embedder, i, config.min_tokens);
  });
  std::vector<SweepRow> rows;
  rows.reserve(thresholds.size());
  for (double t : thresholds) {
    MinedCorpus merged;
    for (const auto& part : scored) {
      auto kept = remove_identical(select_pairs(part, t));
      kept = dedup_by_source(kept, DedupScope::per_article_pair);
      merged.insert(merged.end(), std::make_move_iterator(kept.begin()),
                    std::make_move_iterator(kept.end()));
    }
    if (config.dedup_scope == DedupScope::global) {
      merged = dedup_by_source(merged, DedupScope::global);
    }
    rows.push_back(SweepRow{t, merged.size()});
  }
  return rows;
}

}  // namespace cantomine::mine
