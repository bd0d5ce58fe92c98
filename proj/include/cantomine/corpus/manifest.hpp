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

#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cantomine/corpus/dataset.hpp"
#include "cantomine/util/errors.hpp"

namespace cantomine::corpus {

struct SplitSpec {
  enum class Kind { ratio811, fixed };
  Kind kind = Kind::ratio811;
  std::size_t n_valid = 0;
  std::size_t n_test = 0;
};

struct ManifestEntry {
  std::string name;
  std::filesystem::path path;  // resolved against the manifest location
  CorpusFormat format = CorpusFormat::tsv;
  SplitSpec split;
  bool exclude_from_merged_valid = false;
};

// Manifest file: a JSON array of dataset entries,
//   [{"name": ..., "path": ..., "format": "tsv"|"jsonl",
//     "split": {"kind": "811"} or {"kind":"fixed","n_valid":N,"n_test":N},
//     "exclude_from_merged_valid": bool}]
// Relative dataset paths are taken relative to the manifest's directory so
// a manifest and its data travel together.
inline std::vector<ManifestEntry> load_manifest(
    const std::filesystem::path& manifest_path) {
  std::ifstream in(manifest_path);
  if (!in) {
    throw FormatError("cannot open manifest " + manifest_path.string());
  }
  nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) {
    throw FormatError("manifest " + manifest_path.string() +
                      " is not a JSON array");
  }
  std::filesystem::path base = manifest_path.parent_path();
  std::vector<ManifestEntry> entries;
  std::set<std::string> names;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const nlohmann::json& obj = doc[i];
    std::string where = "manifest entry " + std::to_string(i + 1);
    if (!obj.is_object()) throw FormatError(where + " is not an object");
    auto require_string = [&](const char* key) -> std::string {
      if (!obj.contains(key) || !obj[key].is_string()) {
        throw FormatError(where + ": missing string field \"" + key + "\"");
      }
      return obj[key].get<std::string>();
    };
    ManifestEntry entry;
    entry.name = require_string("name");
    if (entry.name.empty()) throw FormatError(where + ": empty name");
    if (!names.insert(entry.name).second) {
      throw FormatError(where + ": duplicate dataset name \"" + entry.name +
                        "\"");
    }
    std::filesystem::path p = require_string("path");
    entry.path = p.is_absolute() ? p : base / p;
    entry.format = parse_corpus_format(require_string("format"));
    if (!obj.contains("split") || !obj["split"].is_object()) {
      throw FormatError(where + ": missing split object");
    }
    const nlohmann::json& split = obj["split"];
    if (!split.contains("kind") || !split["kind"].is_string()) {
      throw FormatError(where + ": split needs a string kind");
    }
    std::string kind = split["kind"].get<std::string>();
    if (kind == "811") {
      entry.split.kind = SplitSpec::Kind::ratio811;
    } else if (kind == "fixed") {
      entry.split.kind = SplitSpec::Kind::fixed;
      auto require_count = [&](const char* key) -> std::size_t {
        if (!split.contains(key) || !split[key].is_number_unsigned()) {
          throw FormatError(where + ": fixed split needs nonnegative \"" +
                            key + "\"");
        }
        return split[key].get<std::size_t>();
      };
      entry.split.n_valid = require_count("n_valid");
      entry.split.n_test = require_count("n_test");
    } else {
      throw FormatError(where + ": unknown split kind \"" + kind + "\"");
    }
    if (obj.contains("exclude_from_merged_valid")) {
      if (!obj["exclude_from_merged_valid"].is_boolean()) {
        throw FormatError(where +
                          ": exclude_from_merged_valid must be boolean");
      }
      entry.exclude_from_merged_valid =
          obj["exclude_from_merged_valid"].get<bool>();
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace cantomine::corpus
