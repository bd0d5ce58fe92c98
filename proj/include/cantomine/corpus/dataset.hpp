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

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cantomine/io/json_string.hpp"
#include "cantomine/text/normalize.hpp"
#include "cantomine/util/errors.hpp"
#include "cantomine/util/tsv.hpp"

namespace cantomine::corpus {

struct SentencePair {
  std::string src;
  std::string tgt;

  bool operator==(const SentencePair&) const = default;
};

struct ParallelDataset {
  std::string name;
  std::vector<SentencePair> pairs;
  std::string provenance;
};

enum class CorpusFormat { tsv, jsonl };

inline CorpusFormat parse_corpus_format(const std::string& s) {
  if (s == "tsv") return CorpusFormat::tsv;
  if (s == "jsonl") return CorpusFormat::jsonl;
  throw FormatError("unknown corpus format \"" + s + "\" (want tsv or jsonl)");
}

// Serialization round-trips exactly: tabs, newlines, carriage returns and
// backslashes inside cells are backslash-escaped in the tsv form, and the
// jsonl form is standard JSON escaping.
inline void write_corpus(const std::vector<SentencePair>& pairs,
                         CorpusFormat format, std::ostream& out) {
  if (format == CorpusFormat::tsv) {
    for (const SentencePair& p : pairs) {
      out << tsv::escape(p.src) << '\t' << tsv::escape(p.tgt) << '\n';
    }
    return;
  }
  for (const SentencePair& p : pairs) {
    std::string line = "{\"src\":";
    io::append_json_string(line, p.src);
    line += ",\"tgt\":";
    io::append_json_string(line, p.tgt);
    line += "}";
    out << line << '\n';
  }
}

inline std::vector<SentencePair> read_corpus(std::istream& in,
                                             CorpusFormat format) {
  std::vector<SentencePair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (format == CorpusFormat::tsv) {
      auto cells = tsv::split_fields(line);
      // Extra columns (e.g. mining scores) ride along unread; the jsonl
      // branch likewise ignores keys beyond src and tgt.
      if (cells.size() < 2) {
        throw FormatError("line " + std::to_string(line_no) + ": expected " +
                          "at least 2 tab-separated fields, got " +
                          std::to_string(cells.size()));
      }
      pairs.push_back(SentencePair{tsv::unescape(cells[0], line_no),
                                   tsv::unescape(cells[1], line_no)});
    } else {
      nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
      if (obj.is_discarded() || !obj.is_object() || !obj.contains("src") ||
          !obj.contains("tgt") || !obj["src"].is_string() ||
          !obj["tgt"].is_string()) {
        throw FormatError("line " + std::to_string(line_no) +
                          ": expected an object with string src and tgt");
      }
      pairs.push_back(SentencePair{obj["src"].get<std::string>(),
                                   obj["tgt"].get<std::string>()});
    }
  }
  return pairs;
}

// Dataset loading for splitting: both sides are normalized and must come
// out nonempty, since an empty member can never form a usable example.
inline ParallelDataset load_dataset(const std::string& name, std::istream& in,
                                    CorpusFormat format,
                                    const std::string& provenance = "") {
  ParallelDataset dataset;
  dataset.name = name;
  dataset.provenance = provenance;
  std::vector<SentencePair> raw = read_corpus(in, format);
  dataset.pairs.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    SentencePair p{text::normalize(raw[i].src), text::normalize(raw[i].tgt)};
    if (p.src.empty() || p.tgt.empty()) {
      throw InvariantError("dataset \"" + name + "\" pair " +
                           std::to_string(i + 1) +
                           " is empty after normalization");
    }
    dataset.pairs.push_back(std::move(p));
  }
  return dataset;
}

}  // namespace cantomine::corpus
