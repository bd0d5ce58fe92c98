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

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "cantomine/embed/vector.hpp"
#include "cantomine/text/normalize.hpp"
#include "cantomine/util/errors.hpp"

namespace cantomine::embed {

// Precomputed sentence vectors, e.g. from a multilingual encoder run
// offline. File format, one record per line:
//
//   sentence<TAB>v1,v2,...,vD
//
// UTF-8, '\n' line ends, all records sharing D. Vectors are re-normalized
// to unit L2 norm on load; the table is keyed by normalized sentence text.
class ExternalEmbeddings {
 public:
  struct LoadStats {
    std::size_t records = 0;
    std::size_t duplicates = 0;
  };

  static ExternalEmbeddings load(std::istream& in, std::ostream* warnings = nullptr) {
    ExternalEmbeddings table;
    std::string line;
    std::size_t line_no = 0;
    std::size_t dim = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      std::size_t tab = line.find('\t');
      if (tab == std::string::npos) {
        throw FormatError("external embeddings: missing tab at line " + std::to_string(line_no));
      }
      std::string key = text::normalize(std::string_view(line).substr(0, tab));
      std::vector<double> components = parse_components(line, tab + 1, line_no);
      if (dim == 0) {
        dim = components.size();
        if (dim == 0) {
          throw FormatError("external embeddings: empty vector at line " +
                            std::to_string(line_no));
        }
      } else if (components.size() != dim) {
        throw FormatError("external embeddings: dimension " + std::to_string(components.size()) +
                          " != " + std::to_string(dim) + " at line " + std::to_string(line_no));
      }
      if (table.vectors_.count(key)) {
        ++table.stats_.duplicates;
        if (warnings) {
          *warnings << "warning: duplicate sentence at line " << line_no << ", keeping first\n";
        }
        continue;
      }
      table.vectors_.emplace(std::move(key), EmbeddingVector::from_dense(components));
      ++table.stats_.records;
    }
    table.dim_ = static_cast<std::uint32_t>(dim);
    return table;
  }

  const EmbeddingVector* find(const std::string& normalized_sentence) const {
    auto it = vectors_.find(normalized_sentence);
    return it == vectors_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return vectors_.size(); }
  std::uint32_t dim() const { return dim_; }
  const LoadStats& stats() const { return stats_; }

 private:
  static std::vector<double> parse_components(const std::string& line, std::size_t from,
                                              std::size_t line_no) {
    std::vector<double> out;
    const char* p = line.data() + from;
    const char* end = line.data() + line.size();
    while (p < end) {
      double value = 0.0;
      auto [next, ec] = std::from_chars(p, end, value);
      if (ec != std::errc()) {
        throw FormatError("external embeddings: bad number at line " + std::to_string(line_no));
      }
      out.push_back(value);
      p = next;
      if (p < end) {
        if (*p != ',') {
          throw FormatError("external embeddings: expected ',' at line " +
                            std::to_string(line_no));
        }
        ++p;
      }
    }
    return out;
  }

  std::unordered_map<std::string, EmbeddingVector> vectors_;
  std::uint32_t dim_ = 0;
  LoadStats stats_;
};

}  // namespace cantomine::embed
