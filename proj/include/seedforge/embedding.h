// Copyright 2026 The SeedForge Authors
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

#ifndef SEEDFORGE_EMBEDDING_H_
#define SEEDFORGE_EMBEDDING_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "seedforge/candidate.h"

namespace seedforge {

// Immutable vocabulary of unit-normalized vectors, one row per token. Tokens
// are case-sensitive and unique. Safe to share across threads.
class EmbeddingStore {
 public:
  class Builder;

  const std::string &model_id() const { return model_id_; }
  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return tokens_.size(); }

  const std::string &token(std::size_t row) const { return tokens_[row]; }
  // Case-folded form of token(row), computed once at build time.
  const std::string &folded_token(std::size_t row) const {
    return folded_[row];
  }
  std::span<const float> vector(std::size_t row) const {
    return {values_.data() + row * dimension_, dimension_};
  }
  std::optional<std::size_t> find(std::string_view token) const;

 private:
  EmbeddingStore() = default;

  std::string model_id_;
  std::size_t dimension_ = 0;
  std::vector<std::string> tokens_;
  std::vector<std::string> folded_;
  std::vector<float> values_;
  std::unordered_map<std::string, std::size_t> rows_;
};

class EmbeddingStore::Builder {
 public:
  enum class AddResult { kAdded, kZeroNorm, kDuplicate, kWrongDimension };

  explicit Builder(std::size_t dimension);

  // Normalizes in double precision and stores the unit vector as float.
  AddResult add(std::string token, std::span<const double> values);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return tokens_.size(); }

  // Throws EmptyVocabulary if nothing was added.
  EmbeddingStore build(std::string model_id) &&;

 private:
  std::size_t dimension_;
  std::vector<std::string> tokens_;
  std::vector<float> values_;
  std::unordered_map<std::string, std::size_t> rows_;
};

struct EmbeddingLoadReport {
  std::size_t lines = 0;
  std::size_t skipped_malformed = 0;
  std::size_t skipped_zero_norm = 0;
  std::size_t skipped_duplicate = 0;
  // First line that failed to parse (wrong arity or bad number), if any.
  std::optional<std::size_t> first_malformed_line;
  std::string first_malformed_reason;

  std::size_t skipped() const {
    return skipped_malformed + skipped_zero_norm + skipped_duplicate;
  }
};

struct LoadedEmbeddings {
  EmbeddingStore store;
  EmbeddingLoadReport report;
};

// "emb:<stem>" / "cat:<stem>" with any trailing .gz removed before the stem
// is taken, e.g. glove.6B.50d.txt.gz -> emb:glove.6B.50d.
std::string model_id_for_path(std::string_view prefix,
                              const std::filesystem::path &path);

// Reads GloVe text: a token followed by d space-separated numbers per line,
// d fixed by the first parseable line. Files ending in .gz are gunzipped.
// Lines the store cannot take are skipped and tallied in the report.
// Throws IoError if the file cannot be read, EmptyVocabulary if no line
// survives. model_id defaults to model_id_for_path("emb", path).
LoadedEmbeddings load_embeddings(const std::filesystem::path &path,
                                 std::string model_id = {});

// Resolves a surface to a unit vector: the exact token; else the lowercased
// surface with whitespace runs replaced by '_'; else the renormalized mean of
// the lowercased whitespace-split tokens that are in the vocabulary.
std::optional<std::vector<double>> lookup_vector(const EmbeddingStore &store,
                                                 std::string_view surface);

// Ranks every non-excluded token by its best cosine against the resolvable
// seeds; origin is the best seed (ties to the smallest seed). Scores are
// clamped to [-1, 1]. Returns the top k by score descending, surface
// ascending. Throws NoResolvableSeed when no positive resolves.
std::vector<CandidateEntry> expand(const EmbeddingStore &store,
                                   const ExpansionRequest &request);

}  // namespace seedforge

#endif  // SEEDFORGE_EMBEDDING_H_
