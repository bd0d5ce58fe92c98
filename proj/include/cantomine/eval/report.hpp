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

#include <functional>
#include <string>
#include <vector>

#include "cantomine/corpus/dataset.hpp"
#include "cantomine/eval/bleu.hpp"
#include "cantomine/util/errors.hpp"

namespace cantomine::eval {

// A translation system under evaluation: given the source sentences of a
// test set, produce one hypothesis per source.
struct System {
  std::string name;
  std::function<std::vector<std::string>(
      const std::string& test_set,
      const std::vector<std::string>& sources)>
      translate;
};

struct NamedTestSet {
  std::string name;
  std::vector<corpus::SentencePair> pairs;
};

struct ReportCell {
  std::string test_set;
  std::string system;
  BleuResult result;
  bool best = false;  // highest BLEU on this test set
};

// Scores every system on every test set. Systems must return exactly one
// hypothesis per source sentence; anything else is an error naming the
// offender. Cells come back grouped by test set in input order, systems in
// input order, with the per-set maxima flagged.
inline std::vector<ReportCell> evaluate_systems(
    const std::vector<NamedTestSet>& test_sets,
    const std::vector<System>& systems) {
  std::vector<ReportCell> cells;
  for (const NamedTestSet& set : test_sets) {
    std::vector<std::string> sources;
    std::vector<std::string> references;
    sources.reserve(set.pairs.size());
    references.reserve(set.pairs.size());
    for (const corpus::SentencePair& p : set.pairs) {
      sources.push_back(p.src);
      references.push_back(p.tgt);
    }
    std::size_t row_begin = cells.size();
    double row_max = 0.0;
    for (const System& system : systems) {
      std::vector<std::string> hyps = system.translate(set.name, sources);
      if (hyps.size() != sources.size()) {
        throw InvariantError(
            "system \"" + system.name + "\" returned " +
            std::to_string(hyps.size()) + " hypotheses for test set \"" +
            set.name + "\" with " + std::to_string(sources.size()) +
            " sentences");
      }
      ReportCell cell;
      cell.test_set = set.name;
      cell.system = system.name;
      cell.result = corpus_bleu_text(hyps, references);
      row_max = std::max(row_max, cell.result.bleu);
      cells.push_back(std::move(cell));
    }
    for (std::size_t i = row_begin; i < cells.size(); ++i) {
      cells[i].best = cells[i].result.bleu == row_max;
    }
  }
  return cells;
}

// Machine-readable form: one line per (test set, system) cell.
inline std::string render_report_tsv(const std::vector<ReportCell>& cells) {
  std::string out = "test_set\tsystem\tbleu\n";
  for (const ReportCell& cell : cells) {
    out += cell.test_set;
    out.push_back('\t');
    out += cell.system;
    out.push_back('\t');
    out += format_bleu(cell.result.bleu);
    out.push_back('\n');
  }
  return out;
}

// Aligned table for reading, test sets down, systems across, best score
// per row starred.
inline std::string render_report_text(const std::vector<ReportCell>& cells) {
  std::vector<std::string> set_names;
  std::vector<std::string> system_names;
  for (const ReportCell& cell : cells) {
    if (set_names.empty() || set_names.back() != cell.test_set) {
      set_names.push_back(cell.test_set);
    }
  }
  for (const ReportCell& cell : cells) {
    if (cell.test_set == set_names.front()) {
      system_names.push_back(cell.system);
    }
  }
  std::size_t name_width = std::string("test set").size();
  for (const auto& name : set_names) {
    name_width = std::max(name_width, name.size());
  }
  std::vector<std::size_t> col_width(system_names.size());
  for (std::size_t c = 0; c < system_names.size(); ++c) {
    col_width[c] = std::max<std::size_t>(system_names[c].size(), 7);
  }
  auto pad = [](const std::string& s, std::size_t width) {
    std::string out = s;
    while (out.size() < width) out.push_back(' ');
    return out;
  };
  std::string out = pad("test set", name_width);
  for (std::size_t c = 0; c < system_names.size(); ++c) {
    out += "  " + pad(system_names[c], col_width[c]);
  }
  out.push_back('\n');
  for (std::size_t r = 0; r < set_names.size(); ++r) {
    out += pad(set_names[r], name_width);
    for (std::size_t c = 0; c < system_names.size(); ++c) {
      const ReportCell& cell = cells[r * system_names.size() + c];
      std::string score = format_bleu(cell.result.bleu);
      if (cell.best) score.push_back('*');
      out += "  " + pad(score, col_width[c]);
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace cantomine::eval
