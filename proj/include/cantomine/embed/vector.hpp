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

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cantomine/util/errors.hpp"

namespace cantomine::embed {

// A unit-L2-norm sentence vector, stored sparse with entries sorted by
// component index. An all-zero input (empty sentence, or a zero row in an
// external vector file) produces a flagged zero vector that scoring skips.
class EmbeddingVector {
 public:
  using Entry = std::pair<std::uint32_t, double>;

  EmbeddingVector() = default;

  // `entries` must be sorted by index with no duplicates. Values are
  // divided by the L2 norm, accumulated in ascending index order so the
  // result is bit-identical across runs.
  static EmbeddingVector from_sorted_entries(std::uint32_t dim, std::vector<Entry> entries) {
    EmbeddingVector v;
    v.dim_ = dim;
    double sumsq = 0.0;
    for (const auto& [idx, val] : entries) sumsq += val * val;
    if (sumsq == 0.0) {
      v.zero_ = true;
      return v;
    }
    double norm = std::sqrt(sumsq);
    for (auto& [idx, val] : entries) val /= norm;
    v.entries_ = std::move(entries);
    return v;
  }

  static EmbeddingVector from_dense(const std::vector<double>& components) {
    std::vector<Entry> entries;
    entries.reserve(components.size());
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (components[i] != 0.0) entries.emplace_back(static_cast<std::uint32_t>(i), components[i]);
    }
    return from_sorted_entries(static_cast<std::uint32_t>(components.size()), std::move(entries));
  }

  std::uint32_t dim() const { return dim_; }
  bool is_zero() const { return zero_; }
  const std::vector<Entry>& entries() const { return entries_; }

  bool has_negative_component() const {
    for (const auto& [idx, val] : entries_)
      if (val < 0.0) return true;
    return false;
  }

 private:
  std::uint32_t dim_ = 0;
  std::vector<Entry> entries_;
  bool zero_ = false;
};

// Dot product of the unit vectors, merge-joined in ascending index order.
// The summation order does not depend on argument order, so
// cosine(u, v) == cosine(v, u) bit for bit.
inline double cosine_raw(const EmbeddingVector& u, const EmbeddingVector& v) {
  if (u.dim() != v.dim()) {
    throw InvariantError("cosine: dimension mismatch (" + std::to_string(u.dim()) + " vs " +
                         std::to_string(v.dim()) + ")");
  }
  if (u.is_zero() || v.is_zero()) {
    throw InvariantError("cosine: zero vector");
  }
  const auto& a = u.entries();
  const auto& b = v.entries();
  double dot = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      ++i;
    } else if (a[i].first > b[j].first) {
      ++j;
    } else {
      dot += a[i].second * b[j].second;
      ++i;
      ++j;
    }
  }
  return dot;
}

// Similarity score on [0, 1]. External vectors can have negative
// components, so a negative raw cosine clamps to 0; values a rounding error
// above 1 clamp to 1.
inline double cosine(const EmbeddingVector& u, const EmbeddingVector& v) {
  double raw = cosine_raw(u, v);
  if (raw < 0.0) return 0.0;
  if (raw > 1.0) return 1.0;
  return raw;
}

}  // namespace cantomine::embed
