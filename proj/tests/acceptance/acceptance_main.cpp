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

// Acceptance gate: one PASS or FAIL line per criterion, nonzero exit if any
// criterion fails. Each criterion also carries a wall-clock budget; blowing
// the budget is a failure even when every check inside passed. Tolerances
// are pinned here, next to the checks that use them.

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cantomine/corpus/split.hpp"
#include "cantomine/embed/embedder.hpp"
#include "cantomine/eval/bleu.hpp"
#include "cantomine/eval/lexicon.hpp"
#include "cantomine/eval/report.hpp"
#include "cantomine/mine/pipeline.hpp"
#include "cantomine/text/tokenize.hpp"
#include "cantomine/wiki/pairing.hpp"
#include "support/bleu_oracle.hpp"
#include "support/mining_oracle.hpp"
#include "support/rng_text.hpp"

namespace {

namespace fs = std::filesystem;
using cantomine::embed::Embedder;
using cantomine::embed::EmbedderSpec;
using cantomine::mine::DedupScope;
using cantomine::mine::MiningConfig;
using cantomine::mine::ScoredSentencePair;
using cantomine::wiki::ArticlePair;

const fs::path kFixtures = CANTOMINE_FIXTURES_DIR;
const fs::path kGolden = CANTOMINE_GOLDEN_DIR;
const char* kCli = CANTOMINE_CLI_PATH;

// ---------------------------------------------------------------------------
// Small helpers shared by the criteria.

struct Ctx {
  std::string detail;  // first failure wins; later ones are appended

  bool check(bool ok, const std::string& what) {
    if (!ok) {
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
    return ok;
  }
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

bool files_equal(Ctx& ctx, const fs::path& got, const fs::path& want) {
  if (!fs::exists(got)) return ctx.check(false, got.string() + " missing");
  if (!fs::exists(want)) return ctx.check(false, want.string() + " missing");
  std::string a = read_file(got);
  std::string b = read_file(want);
  if (a == b) return true;
  std::size_t line = 1;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n && a[i] == b[i]; ++i) {
    if (a[i] == '\n') ++line;
  }
  return ctx.check(false, got.filename().string() + " differs from golden at line " +
                              std::to_string(line));
}

int run_cli(const std::string& args, const fs::path& log) {
  std::string cmd = std::string("'") + kCli + "' " + args + " > '" +
                    log.string() + "' 2>&1";
  int rc = std::system(cmd.c_str());
  if (rc == -1) return -1;
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

bool run_ok(Ctx& ctx, const std::string& args, const fs::path& log) {
  int rc = run_cli(args, log);
  if (rc == 0) return true;
  std::string tail;
  if (fs::exists(log)) tail = read_file(log);
  if (tail.size() > 200) tail = "..." + tail.substr(tail.size() - 200);
  for (char& c : tail) {
    if (c == '\n') c = ' ';
  }
  return ctx.check(false, "command `" + args + "` exited " +
                              std::to_string(rc) + " (" + tail + ")");
}

std::string shell_path(const fs::path& p) { return "'" + p.string() + "'"; }

// Mined outputs compared as multisets over every field. Scores take part in
// the comparison as exact doubles: both sides accumulate dot products over
// matched indices in ascending order, so equal inputs give equal bits.
using PairKey = std::tuple<std::size_t, std::string, std::string, double, int,
                           int, int, int>;

std::vector<PairKey> signature(std::vector<ScoredSentencePair> pairs) {
  cantomine::testsupport::canonical_sort(pairs);
  std::vector<PairKey> keys;
  keys.reserve(pairs.size());
  for (const auto& p : pairs) {
    keys.emplace_back(p.article_pair_id, p.src.text, p.tgt.text, p.score,
                      p.src.paragraph_index, p.src.sentence_index,
                      p.tgt.paragraph_index, p.tgt.sentence_index);
  }
  return keys;
}

Embedder& shared_embedder() {
  static Embedder embedder{EmbedderSpec{}};
  return embedder;
}

// ---------------------------------------------------------------------------
// Criterion 1: 80/10/10 split arithmetic reproduces the reference row counts.

bool criterion_split_rows(Ctx& ctx) {
  using cantomine::corpus::sizes_811;
  struct Row {
    std::size_t n, train, valid, test;
  };
  const Row rows[] = {
      {10823, 8658, 1082, 1083}, {2532, 2025, 253, 254},
      {8225, 6580, 822, 823},    {1004, 803, 100, 101},
      {5060, 4048, 506, 506},    {651, 520, 65, 66},
      {446, 356, 45, 45},
  };
  std::size_t total = 0;
  std::size_t total_train = 0;
  std::size_t merged_valid = 0;
  for (const Row& row : rows) {
    auto sizes = sizes_811(row.n);
    ctx.check(sizes.train == row.train && sizes.valid == row.valid &&
                  sizes.test == row.test,
              "n=" + std::to_string(row.n) + " expected " +
                  std::to_string(row.train) + "/" + std::to_string(row.valid) +
                  "/" + std::to_string(row.test) + " got " +
                  std::to_string(sizes.train) + "/" +
                  std::to_string(sizes.valid) + "/" +
                  std::to_string(sizes.test));
    total += row.n;
    total_train += sizes.train;
    merged_valid += sizes.valid;
  }
  // The wiki-mined corpus uses fixed validation and test slices of 1500.
  const std::size_t wiki_n = 72693;
  const std::size_t wiki_train = wiki_n - 1500 - 1500;
  ctx.check(wiki_train == 69693, "wiki train expected 69693, got " +
                                     std::to_string(wiki_train));
  total += wiki_n;
  total_train += wiki_train;
  ctx.check(total == 101434,
            "total sentence pairs expected 101434, got " + std::to_string(total));
  ctx.check(total_train == 92683,
            "total train expected 92683, got " + std::to_string(total_train));
  ctx.check(merged_valid == 2873, "merged non-wiki validation expected 2873, got " +
                                      std::to_string(merged_valid));
  return ctx.detail.empty();
}

// ---------------------------------------------------------------------------
// Criterion 2: corpus BLEU. Identity corpora must hit 100 exactly, the two
// worked examples land within 0.01, and 60 random corpora agree with an
// independent oracle to 1e-9.

bool criterion_bleu(Ctx& ctx) {
  using cantomine::eval::corpus_bleu_text;
  const std::vector<std::string> id1 = {"香港 好", "我 係 香港 人"};
  ctx.check(corpus_bleu_text(id1, id1).bleu == 100.0,
            "identity corpus did not score exactly 100");
  const std::vector<std::string> id2 = {"好", "唔 好"};
  ctx.check(corpus_bleu_text(id2, id2).bleu == 100.0,
            "short identity corpus did not score exactly 100");

  double worked1 = corpus_bleu_text({"a b c d e"}, {"a b c d f"}).bleu;
  ctx.check(std::abs(worked1 - 66.87) <= 0.01,
            "worked example 1 expected 66.87, got " + std::to_string(worked1));
  double worked2 = corpus_bleu_text({"a b c d"}, {"a b c d e"}).bleu;
  ctx.check(std::abs(worked2 - 77.88) <= 0.01,
            "worked example 2 expected 77.88, got " + std::to_string(worked2));

  auto join = [](const cantomine::text::TokenSequence& tokens) {
    std::string out;
    for (const std::string& t : tokens) {
      if (!out.empty()) out.push_back(' ');
      out += t;
    }
    return out;
  };
  std::mt19937_64 rng(20260814);
  for (int trial = 0; trial < 60; ++trial) {
    auto corpus = cantomine::testsupport::random_bleu_corpus(rng);
    std::vector<std::string> hyps;
    std::vector<std::string> refs;
    for (const auto& t : corpus.hyps) hyps.push_back(join(t));
    for (const auto& t : corpus.refs) refs.push_back(join(t));
    double got = corpus_bleu_text(hyps, refs).bleu;
    double want = cantomine::testsupport::oracle_corpus_bleu(corpus.hyps, corpus.refs);
    if (!ctx.check(std::abs(got - want) <= 1e-9,
                   "random corpus trial " + std::to_string(trial) + ": got " +
                       std::to_string(got) + ", oracle " +
                       std::to_string(want))) {
      return false;
    }
  }
  return ctx.detail.empty();
}

// ---------------------------------------------------------------------------
// Criterion 3: the staged pipeline matches a straight-line brute-force
// reimplementation on 200 random article pairs at four thresholds, and on a
// batch of multi-pair corpora covering both dedup scopes.

bool criterion_mining_oracle(Ctx& ctx) {
  const double thresholds[] = {0.0, 0.5, 0.93, 1.0};
  std::mt19937_64 rng(7);
  for (std::size_t i = 0; i < 200; ++i) {
    std::vector<ArticlePair> pairs = {
        cantomine::testsupport::random_article_pair(rng, i)};
    for (double threshold : thresholds) {
      MiningConfig config;
      config.threshold = threshold;
      config.digit_filter = (i % 2 == 0);
      auto got = cantomine::mine::mine_corpus(pairs, shared_embedder(), config);
      auto want = cantomine::testsupport::oracle_mine(pairs, shared_embedder(),
                                                      config);
      if (!ctx.check(signature(got) == signature(want),
                     "pair " + std::to_string(i) + " threshold " +
                         std::to_string(threshold) +
                         ": staged and brute-force outputs differ")) {
        return false;
      }
    }
  }
  for (std::size_t i = 0; i < 20; ++i) {
    std::vector<ArticlePair> pairs;
    for (std::size_t k = 0; k < 5; ++k) {
      pairs.push_back(cantomine::testsupport::random_article_pair(rng, k));
    }
    MiningConfig config;
    config.threshold = thresholds[i % 4];
    config.dedup_scope = (i % 2 == 0) ? DedupScope::global
                                      : DedupScope::per_article_pair;
    auto got = cantomine::mine::mine_corpus(pairs, shared_embedder(), config);
    auto want = cantomine::testsupport::oracle_mine(pairs, shared_embedder(),
                                                    config);
    if (!ctx.check(signature(got) == signature(want),
                   "multi-pair corpus " + std::to_string(i) +
                       ": staged and brute-force outputs differ")) {
      return false;
    }
  }
  return ctx.detail.empty();
}

// ---------------------------------------------------------------------------
// Criterion 4: raising the threshold can only shrink the mined corpus, and
// the higher-threshold output is a sub-multiset of the lower one.

bool criterion_monotonicity(Ctx& ctx) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<ArticlePair> pairs;
    for (std::size_t k = 0; k < 6; ++k) {
      pairs.push_back(cantomine::testsupport::random_article_pair(rng, k));
    }
    MiningConfig config;
    config.dedup_scope =
        (trial % 2 == 0) ? DedupScope::per_article_pair : DedupScope::global;
    std::vector<std::vector<PairKey>> mined;
    for (double threshold : {0.90, 0.93, 0.95}) {
      config.threshold = threshold;
      mined.push_back(signature(
          cantomine::mine::mine_corpus(pairs, shared_embedder(), config)));
    }
    for (std::size_t level = 1; level < mined.size(); ++level) {
      if (!ctx.check(mined[level].size() <= mined[level - 1].size(),
                     "trial " + std::to_string(trial) +
                         ": count grew when the threshold rose")) {
        return false;
      }
      if (!ctx.check(std::includes(mined[level - 1].begin(),
                                   mined[level - 1].end(),
                                   mined[level].begin(), mined[level].end()),
                     "trial " + std::to_string(trial) +
                         ": higher-threshold output is not a subset")) {
        return false;
      }
    }
  }
  return ctx.detail.empty();
}

// ---------------------------------------------------------------------------
// Criterion 5: every mined output is free of identical pairs and duplicate
// sources, and the digit-consistency filter rejects the two canonical
// mismatches.

bool criterion_clean_outputs(Ctx& ctx) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ArticlePair> pairs;
    for (std::size_t k = 0; k < 4; ++k) {
      pairs.push_back(cantomine::testsupport::random_article_pair(rng, k));
    }
    MiningConfig config;
    config.threshold = (trial % 2 == 0) ? 0.0 : 0.5;
    config.dedup_scope =
        (trial % 3 == 0) ? DedupScope::global : DedupScope::per_article_pair;
    auto mined = cantomine::mine::mine_corpus(pairs, shared_embedder(), config);
    std::set<std::pair<std::size_t, std::string>> per_article;
    std::set<std::string> global_sources;
    for (const auto& p : mined) {
      if (!ctx.check(p.src.text != p.tgt.text,
                     "identical pair survived mining")) {
        return false;
      }
      if (!ctx.check(per_article.emplace(p.article_pair_id, p.src.text).second,
                     "duplicate source within an article pair")) {
        return false;
      }
      if (config.dedup_scope == DedupScope::global &&
          !ctx.check(global_sources.insert(p.src.text).second,
                     "duplicate source across article pairs")) {
        return false;
      }
      if (config.digit_filter &&
          !ctx.check(cantomine::mine::digit_runs(p.src.text) ==
                         cantomine::mine::digit_runs(p.tgt.text),
                     "digit-inconsistent pair survived mining")) {
        return false;
      }
    }
  }

  auto make_pair = [](const std::string& src, const std::string& tgt) {
    ScoredSentencePair p;
    p.src.text = src;
    p.tgt.text = tgt;
    p.score = 0.99;
    p.article_pair_id = 0;
    return p;
  };
  std::vector<ScoredSentencePair> dates = {
      make_pair("條約喺1840年簽訂。", "條約喺1842年簽訂。"),
      make_pair("2017年2月27日公布。", "2017年2月3號公布。"),
      make_pair("佢2017年2月27號嚟。", "佢2017年2月27號到。"),
  };
  auto kept = cantomine::mine::digit_consistency_filter(dates);
  ctx.check(kept.size() == 1 && kept[0].src.text == "佢2017年2月27號嚟。",
            "digit filter kept " + std::to_string(kept.size()) +
                " of the canonical examples (want only the consistent one)");
  return ctx.detail.empty();
}

// ---------------------------------------------------------------------------
// Criterion 6: the mine command is worker-count independent: runs with
// --workers 1 and --workers 8, three times each, emit identical bytes.

bool criterion_worker_determinism(Ctx& ctx, const fs::path& dir) {
  fs::create_directories(dir);
  const fs::path zh = dir / "articles_zh.jsonl";
  const fs::path yue = dir / "articles_yue.jsonl";
  const fs::path pairs = dir / "pairs.jsonl";
  if (!run_ok(ctx,
              "ingest --dump " + shell_path(kFixtures / "zh_dump.xml") +
                  " --lang zh --out " + shell_path(zh),
              dir / "ingest_zh.log") ||
      !run_ok(ctx,
              "ingest --dump " + shell_path(kFixtures / "yue_dump.xml") +
                  " --lang yue --out " + shell_path(yue),
              dir / "ingest_yue.log") ||
      !run_ok(ctx,
              "pair --src " + shell_path(zh) + " --tgt " + shell_path(yue) +
                  " --links " + shell_path(kFixtures / "langlinks.tsv") +
                  " --out " + shell_path(pairs),
              dir / "pair.log")) {
    return false;
  }
  std::string reference;
  for (int run = 0; run < 3; ++run) {
    for (int workers : {1, 8}) {
      fs::path out = dir / ("mined_w" + std::to_string(workers) + "_r" +
                            std::to_string(run) + ".tsv");
      if (!run_ok(ctx,
                  "mine --src " + shell_path(zh) + " --tgt " +
                      shell_path(yue) + " --pairs " + shell_path(pairs) +
                      " --threshold 0.5 --workers " +
                      std::to_string(workers) + " --out " + shell_path(out),
                  dir / "mine.log")) {
        return false;
      }
      std::string bytes = read_file(out);
      if (reference.empty() && run == 0 && workers == 1) {
        reference = bytes;
        if (!ctx.check(!reference.empty(), "mined output is empty")) {
          return false;
        }
        continue;
      }
      if (!ctx.check(bytes == reference,
                     "workers=" + std::to_string(workers) + " run " +
                         std::to_string(run) +
                         " differs from the single-worker output")) {
        return false;
      }
    }
  }
  return ctx.detail.empty();
}

// ---------------------------------------------------------------------------
// Criterion 7: the full command-line pipeline on the fixture dumps matches
// the committed golden outputs byte for byte.

bool criterion_end_to_end(Ctx& ctx, const fs::path& dir) {
  fs::create_directories(dir);
  const fs::path zh = dir / "articles_zh.jsonl";
  const fs::path yue = dir / "articles_yue.jsonl";
  const fs::path pairs = dir / "pairs.jsonl";
  const fs::path mined = dir / "mined.tsv";
  const fs::path sweep = dir / "sweep.tsv";
  const fs::path report = dir / "report.tsv";

  if (!run_ok(ctx,
              "ingest --dump " + shell_path(kFixtures / "zh_dump.xml") +
                  " --lang zh --out " + shell_path(zh),
              dir / "ingest_zh.log") ||
      !run_ok(ctx,
              "ingest --dump " + shell_path(kFixtures / "yue_dump.xml") +
                  " --lang yue --out " + shell_path(yue),
              dir / "ingest_yue.log") ||
      !run_ok(ctx,
              "pair --src " + shell_path(zh) + " --tgt " + shell_path(yue) +
                  " --links " + shell_path(kFixtures / "langlinks.tsv") +
                  " --out " + shell_path(pairs),
              dir / "pair.log") ||
      !run_ok(ctx,
              "mine --src " + shell_path(zh) + " --tgt " + shell_path(yue) +
                  " --pairs " + shell_path(pairs) +
                  " --threshold 0.5 --out " + shell_path(mined),
              dir / "mine.log") ||
      !run_ok(ctx,
              "sweep --src " + shell_path(zh) + " --tgt " + shell_path(yue) +
                  " --pairs " + shell_path(pairs) +
                  " --thresholds 0.3,0.5,0.7 --out " + shell_path(sweep),
              dir / "sweep.log")) {
    return false;
  }
  for (const char* name : {"toy_a.tsv", "toy_b.tsv", "toy_c.tsv",
                           "manifest.json"}) {
    fs::copy_file(kFixtures / name, dir / name,
                  fs::copy_options::overwrite_existing);
  }
  if (!run_ok(ctx,
              "split --manifest " + shell_path(dir / "manifest.json") +
                  " --out " + shell_path(dir / "split") + " --seed 42",
              dir / "split.log") ||
      !run_ok(ctx,
              "report --manifest " + shell_path(dir / "manifest.json") +
                  " --seed 42 --systems copy,lexicon --out " +
                  shell_path(report),
              dir / "report.log")) {
    return false;
  }

  bool ok = true;
  ok &= files_equal(ctx, zh, kGolden / "articles_zh.jsonl");
  ok &= files_equal(ctx, yue, kGolden / "articles_yue.jsonl");
  ok &= files_equal(ctx, pairs, kGolden / "pairs.jsonl");
  ok &= files_equal(ctx, mined, kGolden / "mined.tsv");
  ok &= files_equal(ctx, sweep, kGolden / "sweep.tsv");
  ok &= files_equal(ctx, report, kGolden / "report.tsv");
  for (const char* name :
       {"toy_a.train.tsv", "toy_a.valid.tsv", "toy_a.test.tsv",
        "toy_b.train.tsv", "toy_b.valid.tsv", "toy_b.test.tsv",
        "toy_c.train.tsv", "toy_c.valid.tsv", "toy_c.test.tsv",
        "mined.train.tsv", "mined.valid.tsv", "mined.test.tsv",
        "merged.valid.tsv"}) {
    ok &= files_equal(ctx, dir / "split" / name, kGolden / "split" / name);
  }
  return ok && ctx.detail.empty();
}

// ---------------------------------------------------------------------------
// Criterion 8: the copy baseline scores exactly 100.00 when references equal
// sources and strictly lower once references are perturbed.

bool criterion_copy_baseline(Ctx& ctx, const fs::path& dir) {
  using cantomine::eval::evaluate_systems;
  using cantomine::eval::NamedTestSet;
  using cantomine::eval::System;

  auto load_pairs = [](const fs::path& path) {
    std::ifstream in(path);
    return cantomine::corpus::load_dataset(path.stem().string(), in,
                                           cantomine::corpus::CorpusFormat::tsv)
        .pairs;
  };
  std::vector<NamedTestSet> sets = {
      {"same", load_pairs(kFixtures / "copyset_same.tsv")},
      {"perturbed", load_pairs(kFixtures / "copyset_perturbed.tsv")},
  };
  std::vector<System> systems = {
      {"copy",
       [](const std::string&, const std::vector<std::string>& src) {
         return cantomine::eval::copy_baseline(src);
       }},
  };
  auto cells = evaluate_systems(sets, systems);
  if (!ctx.check(cells.size() == 2, "expected two report cells")) return false;
  ctx.check(cells[0].result.bleu == 100.0 &&
                cantomine::eval::format_bleu(cells[0].result.bleu) == "100.00",
            "copy on references==sources expected exactly 100.00, got " +
                cantomine::eval::format_bleu(cells[0].result.bleu));
  bool perfect = cells[0].result.brevity_penalty == 1.0;
  for (double p : cells[0].result.precisions) perfect = perfect && p == 1.0;
  ctx.check(perfect, "identical references should give unit precisions and "
                     "no brevity penalty");
  ctx.check(cells[1].result.bleu < 100.0,
            "copy on perturbed references expected < 100, got " +
                cantomine::eval::format_bleu(cells[1].result.bleu));

  // Same story through the command line.
  fs::create_directories(dir);
  const fs::path same_log = dir / "bleu_same.log";
  const fs::path pert_log = dir / "bleu_perturbed.log";
  if (!run_ok(ctx,
              "bleu --hyp " + shell_path(kFixtures / "bleu_ref.txt") +
                  " --ref " + shell_path(kFixtures / "bleu_ref.txt"),
              same_log) ||
      !run_ok(ctx,
              "bleu --hyp " + shell_path(kFixtures / "bleu_ref.txt") +
                  " --ref " + shell_path(kFixtures / "bleu_perturbed.txt"),
              pert_log)) {
    return false;
  }
  std::string same_out = read_file(same_log);
  ctx.check(same_out == "100.00\n",
            "bleu CLI on identical files printed \"" + same_out + "\"");
  double perturbed = std::strtod(read_file(pert_log).c_str(), nullptr);
  ctx.check(perturbed < 100.0 && perturbed >= 0.0,
            "bleu CLI on perturbed references printed " + read_file(pert_log));
  return ctx.detail.empty();
}

}  // namespace

int main() {
  fs::path work = fs::temp_directory_path() /
                  ("cantomine_acceptance_" + std::to_string(getpid()));
  fs::create_directories(work);

  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<bool(Ctx&)> fn;
  };
  const std::vector<Criterion> criteria = {
      {1, "split arithmetic matches the reference row counts", 1.0,
       criterion_split_rows},
      {2, "corpus BLEU: identity, worked examples, random oracle", 5.0,
       criterion_bleu},
      {3, "staged mining equals brute force on 200 random article pairs",
       30.0, criterion_mining_oracle},
      {4, "mined corpora shrink monotonically with the threshold", 10.0,
       criterion_monotonicity},
      {5, "mined outputs are deduplicated, non-identical, digit-consistent",
       10.0, criterion_clean_outputs},
      {6, "mine --workers 1 and 8 agree byte for byte across reruns", 10.0,
       [&](Ctx& ctx) { return criterion_worker_determinism(ctx, work / "c6"); }},
      {7, "end-to-end pipeline matches committed goldens byte for byte", 10.0,
       [&](Ctx& ctx) { return criterion_end_to_end(ctx, work / "c7"); }},
      {8, "copy baseline: 100.00 on identical references, lower otherwise",
       10.0, [&](Ctx& ctx) { return criterion_copy_baseline(ctx, work / "c8"); }},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    Ctx ctx;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criterion.fn(ctx);
    } catch (const std::exception& e) {
      ctx.check(false, std::string("exception: ") + e.what());
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (ok && elapsed > criterion.budget_s) {
      ok = ctx.check(false, "took " + std::to_string(elapsed) +
                                "s, budget " +
                                std::to_string(criterion.budget_s) + "s");
    }
    if (ok) {
      std::printf("PASS: criterion %d: %s [%.2fs]\n", criterion.id,
                  criterion.name, elapsed);
    } else {
      ++failures;
      std::printf("FAIL: criterion %d: %s [%.2fs] %s\n", criterion.id,
                  criterion.name, elapsed, ctx.detail.c_str());
    }
  }

  if (failures == 0) {
    std::error_code ec;
    fs::remove_all(work, ec);
    return 0;
  }
  std::printf("%d criterion(s) failed; artifacts kept in %s\n", failures,
              work.string().c_str());
  return 1;
}
