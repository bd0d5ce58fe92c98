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

#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cantomine/corpus/dataset.hpp"
#include "cantomine/util/errors.hpp"

namespace cantomine::corpus {

struct DatasetSplit {
  std::vector<SentencePair> train;
  std::vector<SentencePair> valid;
  std::vector<SentencePair> test;
  std::uint64_t seed = 0;
};

struct SplitSizes {
  std::size_t train = 0;
  std::size_t valid = 0;
  std::size_t test = 0;
};

// 8:1:1 arithmetic, all in integers: train is floor(0.8n) computed as
// 4n/5, valid rounds n/10 half to even, test takes the remainder. This is
// the one rule that agrees with every published row, including 8225 (822.5
// rounds down to 822) and 446 (44.6 rounds up to 45).
inline SplitSizes sizes_811(std::size_t n) {
  SplitSizes sizes;
  sizes.train = n * 4 / 5;
  std::size_t q = n / 10;
  std::size_t r = n % 10;
  if (r < 5) {
    sizes.valid = q;
  } else if (r > 5) {
    sizes.valid = q + 1;
  } else {
    sizes.valid = q + (q % 2);  // halfway: round to even
  }
  sizes.test = n - sizes.train - sizes.valid;
  return sizes;
}

// Seeded Fisher-Yates permutation of [0, n). The generator is pinned to
// std::mt19937_64 seeded directly with `seed`, drawing one value per swap
// and reducing it modulo the prefix length; anyone can replay it.
inline std::vector<std::size_t> shuffled_indices(std::size_t n,
                                                 std::uint64_t seed) {
  std::vector<std::size_t> indices(n);
  std::iota(indices.begin(), indices.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(indices[i - 1], indices[j]);
  }
  return indices;
}

namespace detail {

inline DatasetSplit assemble_split(const ParallelDataset& dataset,
                                   const SplitSizes& sizes,
                                   std::uint64_t seed) {
  std::vector<std::size_t> order = shuffled_indices(dataset.pairs.size(), seed);
  DatasetSplit split;
  split.seed = seed;
  split.train.reserve(sizes.train);
  split.valid.reserve(sizes.valid);
  split.test.reserve(sizes.test);
  std::size_t at = 0;
  for (std::size_t k = 0; k < sizes.train; ++k) {
    split.train.push_back(dataset.pairs[order[at++]]);
  }
  for (std::size_t k = 0; k < sizes.valid; ++k) {
    split.valid.push_back(dataset.pairs[order[at++]]);
  }
  for (std::size_t k = 0; k < sizes.test; ++k) {
    split.test.push_back(dataset.pairs[order[at++]]);
  }
  return split;
}

}  // namespace detail

inline DatasetSplit split_811(const ParallelDataset& dataset,
                              std::uint64_t seed) {
  if (dataset.pairs.size() < 3) {
    throw InvariantError("dataset \"" + dataset.name +
                         "\" has fewer than 3 pairs, cannot split 8:1:1");
  }
  return detail::assemble_split(dataset, sizes_811(dataset.pairs.size()),
                                seed);
}

inline DatasetSplit split_fixed(const ParallelDataset& dataset,
                                std::size_t n_valid, std::size_t n_test,
                                std::uint64_t seed) {
  std::size_t n = dataset.pairs.size();
  if (n_valid + n_test >= n) {
    throw InvariantError(
        "dataset \"" + dataset.name + "\": requested valid " +
        std::to_string(n_valid) + " + test " + std::to_string(n_test) +
        " leave no training data out of " + std::to_string(n));
  }
  SplitSizes sizes;
  sizes.valid = n_valid;
  sizes.test = n_test;
  sizes.train = n - n_valid - n_test;
  return detail::assemble_split(dataset, sizes, seed);
}

// Merged validation set: the valid portions of every non-excluded dataset,
// concatenated in declared order. Excluding a name that is not present is
// treated as a configuration mistake, not silently ignored.
inline std::vector<SentencePair> merge_validation(
    const std::vector<std::pair<std::string, const DatasetSplit*>>& splits,
    const std::set<std::string>& exclude) {
  std::set<std::string> names;
  for (const auto& [name, split] : splits) names.insert(name);
  for (const std::string& name : exclude) {
    if (names.find(name) == names.end()) {
      throw InvariantError("cannot exclude unknown dataset \"" + name + "\"");
    }
  }
  std::vector<SentencePair> merged;
  for (const auto& [name, split] : splits) {
    if (exclude.find(name) != exclude.end()) continue;
    merged.insert(merged.end(), split->valid.begin(), split->valid.end());
  }
  return merged;
}

}  // namespace cantomine::corpus
