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

// Command line front end for the mining pipeline. Subcommands mirror the
// pipeline stages so a run can be resumed at any point:
//
//   ingest     dump XML -> clean article JSONL
//   sentences  article JSONL -> sentence JSONL
//   pair       two article files + langlinks -> article pair JSONL
//   mine       article pairs -> scored parallel corpus
//   sweep      article pairs -> threshold/count table
//   split      dataset manifest -> train/valid/test files
//   bleu       hypothesis file vs reference file -> score
//   report     manifest + systems -> BLEU table
//
// Every output-producing run writes a provenance JSON next to its output:
// the effective options plus an FNV-1a digest of each input, so a result
// can be traced back to exact inputs. Exit codes: 0 success, 1 invariant
// violation, 2 I/O or format problem.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cantomine/corpus/dataset.hpp"
#include "cantomine/corpus/manifest.hpp"
#include "cantomine/corpus/split.hpp"
#include "cantomine/embed/embedder.hpp"
#include "cantomine/eval/bleu.hpp"
#include "cantomine/eval/lexicon.hpp"
#include "cantomine/eval/report.hpp"
#include "cantomine/io/json_string.hpp"
#include "cantomine/io/jsonl.hpp"
#include "cantomine/mine/pipeline.hpp"
#include "cantomine/text/normalize.hpp"
#include "cantomine/text/sentence.hpp"
#include "cantomine/util/errors.hpp"
#include "cantomine/util/fnv.hpp"
#include "cantomine/util/tsv.hpp"
#include "cantomine/wiki/dump_parser.hpp"
#include "cantomine/wiki/langlinks.hpp"
#include "cantomine/wiki/pairing.hpp"
#include "cantomine/wiki/wikitext.hpp"

namespace {

using cantomine::FormatError;
using cantomine::InvariantError;

constexpr const char* kVersion = "cantomine 1.0.0";

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open input file " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot open output file " + path);
  return out;
}

void finish_output(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw FormatError("write failed for " + path);
}

std::string file_digest(const std::string& path) {
  std::ifstream in = open_input(path);
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(cantomine::fnv1a64(content)));
  return buf;
}

// Provenance sits next to the artifact it describes. No timestamps, so
// reruns on identical inputs produce identical provenance.
void write_provenance(const std::string& out_path, const std::string& command,
                      const nlohmann::json& options,
                      const std::vector<std::string>& inputs) {
  nlohmann::json doc;
  doc["command"] = command;
  doc["options"] = options;
  nlohmann::json input_list = nlohmann::json::array();
  for (const std::string& path : inputs) {
    nlohmann::json entry;
    entry["path"] = path;
    entry["fnv1a64"] = file_digest(path);
    input_list.push_back(entry);
  }
  doc["inputs"] = input_list;
  std::ofstream out = open_output(out_path);
  out << doc.dump(2) << '\n';
  finish_output(out, out_path);
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// ---------------------------------------------------------------------------
// ingest

struct IngestArgs {
  std::string dump;
  std::string lang;
  std::string out;
};

void run_ingest(const IngestArgs& args) {
  std::ifstream in = open_input(args.dump);
  std::ofstream out = open_output(args.out);
  cantomine::wiki::DumpParser parser(in, &std::cerr);
  std::uint64_t articles = 0;
  while (auto page = parser.next()) {
    auto article = cantomine::wiki::clean_article(*page, args.lang);
    if (!article.has_value()) continue;
    out << cantomine::io::article_line(*article) << '\n';
    ++articles;
  }
  finish_output(out, args.out);
  write_provenance(args.out + ".provenance.json", "ingest",
                   {{"dump", args.dump}, {"lang", args.lang}}, {args.dump});
  const auto& stats = parser.stats();
  std::cout << "pages=" << stats.pages_seen << " articles=" << articles
            << " redirects=" << stats.redirects
            << " skipped=" << stats.skipped_missing_text +
                                  stats.skipped_missing_title
            << '\n';
}

// ---------------------------------------------------------------------------
// sentences

struct SentencesArgs {
  std::string articles;
  std::string out;
  bool lowercase = false;
};

void run_sentences(const SentencesArgs& args) {
  std::ifstream in = open_input(args.articles);
  auto articles = cantomine::io::read_articles(in);
  std::ofstream out = open_output(args.out);
  std::uint64_t count = 0;
  for (const auto& article : articles) {
    for (const auto& sentence : cantomine::text::extract_sentences(
             article.paragraphs, article.lang, article.title,
             args.lowercase)) {
      out << cantomine::io::sentence_line(sentence) << '\n';
      ++count;
    }
  }
  finish_output(out, args.out);
  write_provenance(args.out + ".provenance.json", "sentences",
                   {{"articles", args.articles},
                    {"lowercase", args.lowercase}},
                   {args.articles});
  std::cout << "sentences=" << count << '\n';
}

// ---------------------------------------------------------------------------
// pair

struct PairArgs {
  std::string src;
  std::string tgt;
  std::string links;
  std::string links_format = "tsv";
  std::string sql_lang;
  std::string exclude_titles;
  bool reverse = false;
  std::string out;
};

void run_pair(const PairArgs& args) {
  std::ifstream src_in = open_input(args.src);
  auto src_articles = cantomine::io::read_articles(src_in);
  std::ifstream tgt_in = open_input(args.tgt);
  auto tgt_articles = cantomine::io::read_articles(tgt_in);

  std::ifstream links_in = open_input(args.links);
  cantomine::wiki::LangLinkLoad load;
  if (args.links_format == "tsv") {
    load = cantomine::wiki::load_langlinks_tsv(links_in, &std::cerr);
  } else if (args.links_format == "sql") {
    if (args.sql_lang.empty()) {
      throw FormatError("--links-format sql requires --sql-lang");
    }
    load = cantomine::wiki::load_langlinks_sql(links_in, args.sql_lang,
                                               &std::cerr);
  } else {
    throw FormatError("unknown links format \"" + args.links_format + "\"");
  }
  if (args.reverse) {
    for (auto& link : load.links) std::swap(link.from_title, link.to_title);
  }
  std::size_t excluded = 0;
  if (!args.exclude_titles.empty()) {
    std::regex pattern;
    try {
      pattern = std::regex(args.exclude_titles);
    } catch (const std::regex_error& e) {
      throw FormatError(std::string("bad --exclude-titles pattern: ") +
                        e.what());
    }
    std::size_t before = load.links.size();
    std::erase_if(load.links, [&](const cantomine::wiki::LangLink& link) {
      return std::regex_search(link.from_title, pattern) ||
             std::regex_search(link.to_title, pattern);
    });
    excluded = before - load.links.size();
  }
  auto result = cantomine::wiki::pair_articles(src_articles, tgt_articles,
                                               load.links);
  std::ofstream out = open_output(args.out);
  for (const auto& pair : result.pairs) {
    out << cantomine::io::title_pair_line(pair.link) << '\n';
  }
  finish_output(out, args.out);
  write_provenance(args.out + ".provenance.json", "pair",
                   {{"src", args.src},
                    {"tgt", args.tgt},
                    {"links", args.links},
                    {"links_format", args.links_format},
                    {"reverse", args.reverse},
                    {"exclude_titles", args.exclude_titles}},
                   {args.src, args.tgt, args.links});
  std::cout << "pairs=" << result.pairs.size()
            << " unmatched=" << result.unmatched
            << " duplicates=" << load.duplicates + result.duplicates
            << " malformed=" << load.malformed << " excluded=" << excluded
            << '\n';
}

// ---------------------------------------------------------------------------
// mine and sweep

struct EmbedArgs {
  std::string kind = "hash-ngram";
  std::size_t ngram_min = 1;
  std::size_t ngram_max = 3;
  std::size_t dim = std::size_t{1} << 18;
  std::string vectors;
};

struct MineArgs {
  std::string src;
  std::string tgt;
  std::string pairs;
  std::string out;
  std::string format = "tsv";
  std::string config;
  EmbedArgs embed;
  double threshold = 0.93;
  bool no_digit_filter = false;
  std::string dedup_scope = "per-article";
  std::size_t min_tokens = 0;
  std::size_t workers = 1;
  std::vector<double> thresholds;  // sweep only
};

cantomine::embed::EmbedderSpec make_embedder_spec(const EmbedArgs& args) {
  cantomine::embed::EmbedderSpec spec;
  if (args.kind == "hash-ngram") {
    spec.kind = cantomine::embed::EmbedderSpec::Kind::hash_ngram;
    spec.hash.n_min = static_cast<int>(args.ngram_min);
    spec.hash.n_max = static_cast<int>(args.ngram_max);
    spec.hash.dim = static_cast<std::uint32_t>(args.dim);
  } else if (args.kind == "external") {
    spec.kind = cantomine::embed::EmbedderSpec::Kind::external_file;
    spec.path = args.vectors;
  } else {
    throw FormatError("unknown embedder kind \"" + args.kind +
                      "\" (want hash-ngram or external)");
  }
  spec.validate();
  return spec;
}

cantomine::mine::MiningConfig make_mining_config(const MineArgs& args) {
  cantomine::mine::MiningConfig config;
  config.threshold = args.threshold;
  config.digit_filter = !args.no_digit_filter;
  if (args.dedup_scope == "per-article") {
    config.dedup_scope = cantomine::mine::DedupScope::per_article_pair;
  } else if (args.dedup_scope == "global") {
    config.dedup_scope = cantomine::mine::DedupScope::global;
  } else {
    throw FormatError("unknown dedup scope \"" + args.dedup_scope +
                      "\" (want per-article or global)");
  }
  config.min_tokens = args.min_tokens;
  config.validate();
  return config;
}

// Optional JSON config: {"embedder": {...}, "mining": {...}}. Values from
// the file replace built-in defaults; explicit command line flags win over
// both. `given` reports which flags the user typed.
void apply_config_file(MineArgs& args, const CLI::App* cmd) {
  if (args.config.empty()) return;
  std::ifstream in = open_input(args.config);
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    throw FormatError("config " + args.config + " is not a JSON object");
  }
  auto given = [&](const std::string& flag) {
    return cmd->count(flag) > 0;
  };
  if (doc.contains("embedder")) {
    const auto& e = doc["embedder"];
    if (!e.is_object()) throw FormatError("config: embedder must be object");
    if (e.contains("kind") && !given("--embedder")) {
      args.embed.kind = e["kind"].get<std::string>();
    }
    if (e.contains("ngram_min") && !given("--ngram-min")) {
      args.embed.ngram_min = e["ngram_min"].get<std::size_t>();
    }
    if (e.contains("ngram_max") && !given("--ngram-max")) {
      args.embed.ngram_max = e["ngram_max"].get<std::size_t>();
    }
    if (e.contains("dim") && !given("--dim")) {
      args.embed.dim = e["dim"].get<std::size_t>();
    }
    if (e.contains("path") && !given("--vectors")) {
      args.embed.vectors = e["path"].get<std::string>();
    }
  }
  if (doc.contains("mining")) {
    const auto& m = doc["mining"];
    if (!m.is_object()) throw FormatError("config: mining must be object");
    if (m.contains("threshold") && !given("--threshold")) {
      args.threshold = m["threshold"].get<double>();
    }
    if (m.contains("digit_filter") && !given("--no-digit-filter")) {
      args.no_digit_filter = !m["digit_filter"].get<bool>();
    }
    if (m.contains("dedup_scope") && !given("--dedup-scope")) {
      args.dedup_scope = m["dedup_scope"].get<std::string>();
    }
    if (m.contains("min_tokens") && !given("--min-tokens")) {
      args.min_tokens = m["min_tokens"].get<std::size_t>();
    }
  }
}

std::vector<cantomine::wiki::ArticlePair> load_article_pairs(
    const MineArgs& args) {
  std::ifstream src_in = open_input(args.src);
  auto src_articles = cantomine::io::read_articles(src_in);
  std::ifstream tgt_in = open_input(args.tgt);
  auto tgt_articles = cantomine::io::read_articles(tgt_in);
  std::ifstream pairs_in = open_input(args.pairs);
  auto links = cantomine::io::read_title_pairs(pairs_in);

  std::unordered_map<std::string, const cantomine::wiki::CleanArticle*>
      src_index;
  std::unordered_map<std::string, const cantomine::wiki::CleanArticle*>
      tgt_index;
  for (const auto& a : src_articles) src_index.emplace(a.title, &a);
  for (const auto& a : tgt_articles) tgt_index.emplace(a.title, &a);

  std::vector<cantomine::wiki::ArticlePair> pairs;
  pairs.reserve(links.size());
  for (std::size_t i = 0; i < links.size(); ++i) {
    auto s = src_index.find(links[i].to_title);
    if (s == src_index.end()) {
      throw FormatError("pair line " + std::to_string(i + 1) +
                        " references unknown source article \"" +
                        links[i].to_title + "\"");
    }
    auto t = tgt_index.find(links[i].from_title);
    if (t == tgt_index.end()) {
      throw FormatError("pair line " + std::to_string(i + 1) +
                        " references unknown target article \"" +
                        links[i].from_title + "\"");
    }
    pairs.push_back(
        cantomine::wiki::ArticlePair{*s->second, *t->second, links[i]});
  }
  return pairs;
}

nlohmann::json mine_options_json(const MineArgs& args,
                                 const cantomine::mine::MiningConfig& config) {
  nlohmann::json options;
  options["src"] = args.src;
  options["tgt"] = args.tgt;
  options["pairs"] = args.pairs;
  options["embedder"]["kind"] = args.embed.kind;
  if (args.embed.kind == "hash-ngram") {
    options["embedder"]["ngram_min"] = args.embed.ngram_min;
    options["embedder"]["ngram_max"] = args.embed.ngram_max;
    options["embedder"]["dim"] = args.embed.dim;
  } else {
    options["embedder"]["path"] = args.embed.vectors;
  }
  options["mining"]["threshold"] = config.threshold;
  options["mining"]["digit_filter"] = config.digit_filter;
  options["mining"]["dedup_scope"] = args.dedup_scope;
  options["mining"]["min_tokens"] = config.min_tokens;
  return options;
}

void run_mine(MineArgs& args, const CLI::App* cmd) {
  apply_config_file(args, cmd);
  auto spec = make_embedder_spec(args.embed);
  auto config = make_mining_config(args);
  auto article_pairs = load_article_pairs(args);
  cantomine::embed::Embedder embedder(spec);
  auto corpus = cantomine::mine::mine_corpus(article_pairs, embedder, config,
                                             args.workers);
  std::ofstream out = open_output(args.out);
  if (args.format == "tsv") {
    for (const auto& p : corpus) {
      out << cantomine::tsv::escape(p.src.text) << '\t'
          << cantomine::tsv::escape(p.tgt.text) << '\t'
          << cantomine::io::format_score(p.score) << '\t'
          << p.article_pair_id << '\n';
    }
  } else if (args.format == "jsonl") {
    for (const auto& p : corpus) {
      out << cantomine::io::mined_pair_line(p) << '\n';
    }
  } else {
    throw FormatError("unknown mine output format \"" + args.format + "\"");
  }
  finish_output(out, args.out);
  nlohmann::json options = mine_options_json(args, config);
  options["format"] = args.format;
  options["workers"] = args.workers;
  std::vector<std::string> inputs = {args.src, args.tgt, args.pairs};
  if (!args.embed.vectors.empty()) inputs.push_back(args.embed.vectors);
  write_provenance(args.out + ".provenance.json", "mine", options, inputs);
  std::cout << "article_pairs=" << article_pairs.size()
            << " mined=" << corpus.size() << '\n';
}

void run_sweep(MineArgs& args, const CLI::App* cmd) {
  apply_config_file(args, cmd);
  auto spec = make_embedder_spec(args.embed);
  auto config = make_mining_config(args);
  auto article_pairs = load_article_pairs(args);
  cantomine::embed::Embedder embedder(spec);
  auto rows = cantomine::mine::threshold_sweep(
      article_pairs, embedder, args.thresholds, config, args.workers);
  std::ofstream out = open_output(args.out);
  out << "threshold\tcount\n";
  for (const auto& row : rows) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", row.threshold);
    out << buf << '\t' << row.count << '\n';
  }
  finish_output(out, args.out);
  nlohmann::json options = mine_options_json(args, config);
  options["thresholds"] = args.thresholds;
  options["workers"] = args.workers;
  std::vector<std::string> inputs = {args.src, args.tgt, args.pairs};
  if (!args.embed.vectors.empty()) inputs.push_back(args.embed.vectors);
  write_provenance(args.out + ".provenance.json", "sweep", options, inputs);
  for (const auto& row : rows) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", row.threshold);
    std::cout << "threshold=" << buf << " count=" << row.count << '\n';
  }
}

// ---------------------------------------------------------------------------
// split

struct SplitArgs {
  std::string manifest;
  std::string out_dir;
  std::uint64_t seed = 1;
};

// Every dataset gets its own generator stream: the run seed xored with the
// FNV-1a hash of the dataset name. Adding or reordering datasets does not
// disturb the others' splits.
std::uint64_t dataset_seed(std::uint64_t run_seed, const std::string& name) {
  return run_seed ^ cantomine::fnv1a64(name);
}

void run_split(const SplitArgs& args) {
  auto entries = cantomine::corpus::load_manifest(args.manifest);
  std::filesystem::create_directories(args.out_dir);
  std::vector<std::pair<std::string, cantomine::corpus::DatasetSplit>> splits;
  std::set<std::string> exclude;
  std::vector<std::string> inputs = {args.manifest};
  std::size_t total = 0;
  std::size_t total_train = 0;
  for (const auto& entry : entries) {
    std::ifstream in = open_input(entry.path.string());
    auto dataset = cantomine::corpus::load_dataset(entry.name, in,
                                                   entry.format);
    inputs.push_back(entry.path.string());
    std::uint64_t seed = dataset_seed(args.seed, entry.name);
    cantomine::corpus::DatasetSplit split;
    if (entry.split.kind == cantomine::corpus::SplitSpec::Kind::ratio811) {
      split = cantomine::corpus::split_811(dataset, seed);
    } else {
      split = cantomine::corpus::split_fixed(dataset, entry.split.n_valid,
                                             entry.split.n_test, seed);
    }
    if (entry.exclude_from_merged_valid) exclude.insert(entry.name);
    auto write_part = [&](const char* part,
                          const std::vector<cantomine::corpus::SentencePair>&
                              pairs) {
      std::string path =
          (std::filesystem::path(args.out_dir) /
           (entry.name + "." + part + ".tsv"))
              .string();
      std::ofstream out = open_output(path);
      cantomine::corpus::write_corpus(pairs, cantomine::corpus::CorpusFormat::tsv,
                                      out);
      finish_output(out, path);
    };
    write_part("train", split.train);
    write_part("valid", split.valid);
    write_part("test", split.test);
    std::cout << entry.name << " n=" << dataset.pairs.size()
              << " train=" << split.train.size()
              << " valid=" << split.valid.size()
              << " test=" << split.test.size() << '\n';
    total += dataset.pairs.size();
    total_train += split.train.size();
    splits.emplace_back(entry.name, std::move(split));
  }
  std::vector<std::pair<std::string, const cantomine::corpus::DatasetSplit*>>
      split_refs;
  split_refs.reserve(splits.size());
  for (const auto& [name, split] : splits) {
    split_refs.emplace_back(name, &split);
  }
  auto merged = cantomine::corpus::merge_validation(split_refs, exclude);
  std::string merged_path =
      (std::filesystem::path(args.out_dir) / "merged.valid.tsv").string();
  std::ofstream merged_out = open_output(merged_path);
  cantomine::corpus::write_corpus(merged, cantomine::corpus::CorpusFormat::tsv,
                                  merged_out);
  finish_output(merged_out, merged_path);
  write_provenance(
      (std::filesystem::path(args.out_dir) / "provenance.json").string(),
      "split", {{"manifest", args.manifest}, {"seed", args.seed}}, inputs);
  std::cout << "total=" << total << " total_train=" << total_train
            << " merged_valid=" << merged.size() << '\n';
}

// ---------------------------------------------------------------------------
// bleu

struct BleuArgs {
  std::string hyp;
  std::string ref;
  bool lowercase = false;
};

void run_bleu(const BleuArgs& args) {
  auto normalize_all = [&](const std::string& path) {
    std::vector<std::string> lines = read_lines(path);
    for (std::string& line : lines) {
      line = cantomine::text::normalize(line, args.lowercase);
    }
    return lines;
  };
  std::vector<std::string> hyps = normalize_all(args.hyp);
  std::vector<std::string> refs = normalize_all(args.ref);
  if (hyps.size() != refs.size()) {
    throw InvariantError("hypothesis file has " + std::to_string(hyps.size()) +
                         " lines, reference file has " +
                         std::to_string(refs.size()));
  }
  auto result = cantomine::eval::corpus_bleu_text(hyps, refs);
  std::cout << cantomine::eval::format_bleu(result.bleu) << '\n';
}

// ---------------------------------------------------------------------------
// report

struct ReportArgs {
  std::string manifest;
  std::uint64_t seed = 1;
  std::vector<std::string> systems;
  std::string lexicon_file;
  std::string out;
};

cantomine::eval::System make_system(const std::string& spec,
                                    const std::string& lexicon_file) {
  if (spec == "copy") {
    return cantomine::eval::System{
        "copy", [](const std::string&, const std::vector<std::string>& src) {
          return cantomine::eval::copy_baseline(src);
        }};
  }
  if (spec == "lexicon" || spec.rfind("lexicon:", 0) == 0) {
    auto lexicon = std::make_shared<cantomine::eval::Lexicon>(
        cantomine::eval::default_lexicon());
    std::string path = lexicon_file;
    if (spec.rfind("lexicon:", 0) == 0) {
      path = spec.substr(std::string("lexicon:").size());
    }
    if (!path.empty()) {
      std::ifstream in = open_input(path);
      cantomine::eval::load_lexicon(in, *lexicon);
    }
    return cantomine::eval::System{
        "lexicon",
        [lexicon](const std::string&, const std::vector<std::string>& src) {
          std::vector<std::string> out;
          out.reserve(src.size());
          for (const std::string& s : src) {
            out.push_back(cantomine::eval::lexicon_baseline(s, *lexicon));
          }
          return out;
        }};
  }
  if (spec.rfind("hyp:", 0) == 0) {
    std::string rest = spec.substr(4);
    std::size_t eq = rest.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= rest.size()) {
      throw FormatError("bad system spec \"" + spec +
                        "\" (want hyp:NAME=DIR)");
    }
    std::string name = rest.substr(0, eq);
    std::string dir = rest.substr(eq + 1);
    return cantomine::eval::System{
        name, [dir](const std::string& test_set,
                    const std::vector<std::string>&) {
          std::string path =
              (std::filesystem::path(dir) / (test_set + ".txt")).string();
          std::vector<std::string> lines = read_lines(path);
          for (std::string& line : lines) {
            line = cantomine::text::normalize(line);
          }
          return lines;
        }};
  }
  throw FormatError("unknown system spec \"" + spec +
                    "\" (want copy, lexicon[:FILE], or hyp:NAME=DIR)");
}

void run_report(const ReportArgs& args) {
  if (args.systems.empty()) {
    throw FormatError("report needs at least one --systems entry");
  }
  auto entries = cantomine::corpus::load_manifest(args.manifest);
  std::vector<cantomine::eval::NamedTestSet> test_sets;
  std::vector<std::string> inputs = {args.manifest};
  for (const auto& entry : entries) {
    std::ifstream in = open_input(entry.path.string());
    auto dataset = cantomine::corpus::load_dataset(entry.name, in,
                                                   entry.format);
    inputs.push_back(entry.path.string());
    std::uint64_t seed = dataset_seed(args.seed, entry.name);
    cantomine::corpus::DatasetSplit split;
    if (entry.split.kind == cantomine::corpus::SplitSpec::Kind::ratio811) {
      split = cantomine::corpus::split_811(dataset, seed);
    } else {
      split = cantomine::corpus::split_fixed(dataset, entry.split.n_valid,
                                             entry.split.n_test, seed);
    }
    test_sets.push_back(
        cantomine::eval::NamedTestSet{entry.name, std::move(split.test)});
  }
  std::vector<cantomine::eval::System> systems;
  systems.reserve(args.systems.size());
  for (const std::string& spec : args.systems) {
    systems.push_back(make_system(spec, args.lexicon_file));
  }
  auto cells = cantomine::eval::evaluate_systems(test_sets, systems);
  std::ofstream out = open_output(args.out);
  out << cantomine::eval::render_report_tsv(cells);
  finish_output(out, args.out);
  nlohmann::json options;
  options["manifest"] = args.manifest;
  options["seed"] = args.seed;
  options["systems"] = args.systems;
  options["lexicon_file"] = args.lexicon_file;
  write_provenance(args.out + ".provenance.json", "report", options, inputs);
  std::cout << cantomine::eval::render_report_text(cells);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parallel sentence mining and evaluation toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  IngestArgs ingest_args;
  CLI::App* ingest = app.add_subcommand(
      "ingest", "parse a pages-articles XML dump into clean article JSONL");
  ingest->add_option("--dump", ingest_args.dump, "XML dump path")->required();
  ingest->add_option("--lang", ingest_args.lang, "language code")->required();
  ingest->add_option("--out", ingest_args.out, "output JSONL path")
      ->required();

  SentencesArgs sentences_args;
  CLI::App* sentences = app.add_subcommand(
      "sentences", "segment articles into sentence JSONL");
  sentences->add_option("--articles", sentences_args.articles,
                        "article JSONL path")
      ->required();
  sentences->add_option("--out", sentences_args.out, "output JSONL path")
      ->required();
  sentences->add_flag("--lowercase", sentences_args.lowercase,
                      "lowercase ASCII letters");

  PairArgs pair_args;
  CLI::App* pair = app.add_subcommand(
      "pair", "join two article files via interlanguage links");
  pair->add_option("--src", pair_args.src, "source-language article JSONL")
      ->required();
  pair->add_option("--tgt", pair_args.tgt, "target-language article JSONL")
      ->required();
  pair->add_option("--links", pair_args.links, "langlinks file")->required();
  pair->add_option("--links-format", pair_args.links_format,
                   "links file format: tsv or sql");
  pair->add_option("--sql-lang", pair_args.sql_lang,
                   "language code filter for sql links");
  pair->add_flag("--reverse", pair_args.reverse,
                 "links run source->target instead of target->source");
  pair->add_option("--exclude-titles", pair_args.exclude_titles,
                   "drop links whose titles match this regex");
  pair->add_option("--out", pair_args.out, "output pair JSONL")->required();

  auto add_mine_options = [](CLI::App* cmd, MineArgs& args) {
    cmd->add_option("--src", args.src, "source-language article JSONL")
        ->required();
    cmd->add_option("--tgt", args.tgt, "target-language article JSONL")
        ->required();
    cmd->add_option("--pairs", args.pairs, "article pair JSONL")->required();
    cmd->add_option("--out", args.out, "output path")->required();
    cmd->add_option("--config", args.config, "JSON config file");
    cmd->add_option("--embedder", args.embed.kind,
                    "embedder kind: hash-ngram or external");
    cmd->add_option("--ngram-min", args.embed.ngram_min,
                    "smallest n-gram order");
    cmd->add_option("--ngram-max", args.embed.ngram_max,
                    "largest n-gram order");
    cmd->add_option("--dim", args.embed.dim, "hash bucket count");
    cmd->add_option("--vectors", args.embed.vectors,
                    "external embedding table (sentence\\tv1,v2,...)");
    cmd->add_option("--dedup-scope", args.dedup_scope,
                    "dedup scope: per-article or global");
    cmd->add_option("--min-tokens", args.min_tokens,
                    "drop sentences shorter than this many tokens");
    cmd->add_option("--workers", args.workers, "worker thread count");
  };

  MineArgs mine_args;
  CLI::App* mine = app.add_subcommand(
      "mine", "mine parallel sentences from article pairs");
  add_mine_options(mine, mine_args);
  mine->add_option("--threshold", mine_args.threshold,
                   "cosine similarity threshold (inclusive)");
  mine->add_flag("--no-digit-filter", mine_args.no_digit_filter,
                 "keep pairs with mismatched digit runs");
  mine->add_option("--format", mine_args.format,
                   "output format: tsv or jsonl");

  MineArgs sweep_args;
  CLI::App* sweep = app.add_subcommand(
      "sweep", "count mined pairs across similarity thresholds");
  add_mine_options(sweep, sweep_args);
  sweep
      ->add_option("--thresholds", sweep_args.thresholds,
                   "thresholds to evaluate")
      ->required()
      ->delimiter(',');
  sweep->add_flag("--no-digit-filter", sweep_args.no_digit_filter,
                  "accepted for symmetry; sweeps never digit-filter");

  SplitArgs split_args;
  CLI::App* split = app.add_subcommand(
      "split", "split manifest datasets into train/valid/test files");
  split->add_option("--manifest", split_args.manifest, "dataset manifest")
      ->required();
  split->add_option("--out", split_args.out_dir, "output directory")
      ->required();
  split->add_option("--seed", split_args.seed, "shuffle seed");

  BleuArgs bleu_args;
  CLI::App* bleu = app.add_subcommand(
      "bleu", "corpus BLEU of a hypothesis file against a reference file");
  bleu->add_option("--hyp", bleu_args.hyp, "hypothesis file, one per line")
      ->required();
  bleu->add_option("--ref", bleu_args.ref, "reference file, one per line")
      ->required();
  bleu->add_flag("--lowercase", bleu_args.lowercase,
                 "lowercase ASCII before scoring");

  ReportArgs report_args;
  CLI::App* report = app.add_subcommand(
      "report", "BLEU table of systems across manifest test sets");
  report->add_option("--manifest", report_args.manifest, "dataset manifest")
      ->required();
  report->add_option("--seed", report_args.seed,
                     "shuffle seed used when splitting");
  report
      ->add_option("--systems", report_args.systems,
                   "systems: copy, lexicon[:FILE], hyp:NAME=DIR")
      ->required()
      ->delimiter(',');
  report->add_option("--lexicon", report_args.lexicon_file,
                     "extra lexicon entries for the lexicon system");
  report->add_option("--out", report_args.out, "report TSV path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) {
      run_ingest(ingest_args);
    } else if (sentences->parsed()) {
      run_sentences(sentences_args);
    } else if (pair->parsed()) {
      run_pair(pair_args);
    } else if (mine->parsed()) {
      run_mine(mine_args, mine);
    } else if (sweep->parsed()) {
      run_sweep(sweep_args, sweep);
    } else if (split->parsed()) {
      run_split(split_args);
    } else if (bleu->parsed()) {
      run_bleu(bleu_args);
    } else if (report->parsed()) {
      run_report(report_args);
    }
  } catch (const InvariantError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
