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

#include <fstream>
#include <memory>
#include <optional>
#include <string>

#include "cantomine/embed/external.hpp"
#include "cantomine/embed/hash_ngram.hpp"
#include "cantomine/embed/vector.hpp"
#include "cantomine/util/errors.hpp"

namespace cantomine::embed {

struct EmbedderSpec {
  enum class Kind { hash_ngram, external_file };
  Kind kind = Kind::hash_ngram;
  HashNgramSpec hash;
  std::string path;  // external-file only

  void validate() const {
    if (kind == Kind::hash_ngram) {
      if (hash.n_min < 1 || hash.n_min > hash.n_max) {
        throw FormatError("embedder: need 1 <= n_min <= n_max");
      }
      if (hash.dim < 2 || (hash.dim & (hash.dim - 1)) != 0) {
        throw FormatError("embedder: dim must be a power of two >= 2");
      }
    } else if (path.empty()) {
      throw FormatError("embedder: external-file requires a path");
    }
  }
};

// Immutable after construction; embedding is pure, so an Embedder is safe
// to share across mining workers.
class Embedder {
 public:
  explicit Embedder(const EmbedderSpec& spec, std::ostream* warnings = nullptr) : spec_(spec) {
    spec_.validate();
    if (spec_.kind == EmbedderSpec::Kind::external_file) {
      std::ifstream in(spec_.path, std::ios::binary);
      if (!in) throw FormatError("embedder: cannot open " + spec_.path);
      table_ = std::make_shared<ExternalEmbeddings>(ExternalEmbeddings::load(in, warnings));
    }
  }

  // Returns nullopt when no vector exists for the sentence (external table
  // miss) or when the embedding is the flagged zero vector; mining skips
  // such sentences.
  std::optional<EmbeddingVector> operator()(const std::string& normalized_sentence) const {
    if (spec_.kind == EmbedderSpec::Kind::hash_ngram) {
      EmbeddingVector v = embed_hash_ngram(normalized_sentence, spec_.hash);
      if (v.is_zero()) return std::nullopt;
      return v;
    }
    const EmbeddingVector* v = table_->find(normalized_sentence);
    if (v == nullptr || v->is_zero()) return std::nullopt;
    return *v;
  }

  const EmbedderSpec& spec() const { return spec_; }

 private:
  EmbedderSpec spec_;
  std::shared_ptr<const ExternalEmbeddings> table_;
};

}  // namespace cantomine::embed
