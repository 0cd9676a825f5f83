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

#include "seedforge/embedding.h"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <memory>
#include <unordered_set>

#include "seedforge/error.h"
#include "seedforge/text.h"

namespace seedforge {
namespace {

namespace fs = std::filesystem;

bool ends_with(std::string_view text, std::string_view suffix) {
  return text.size() >= suffix.size() &&
         text.substr(text.size() - suffix.size()) == suffix;
}

// Line source over a plain or gzip-compressed file.
class LineReader {
 public:
  explicit LineReader(const fs::path &path) {
    if (ends_with(path.string(), ".gz")) {
      gz_ = gzopen(path.c_str(), "rb");
      if (gz_ == nullptr) {
        throw Error(ErrorCode::kIoError, "cannot open " + path.string());
      }
      gzbuffer(gz_, 1 << 17);
    } else {
      plain_ = std::make_unique<std::ifstream>(path, std::ios::binary);
      if (!*plain_) {
        throw Error(ErrorCode::kIoError, "cannot open " + path.string());
      }
    }
  }
  ~LineReader() {
    if (gz_ != nullptr) gzclose(gz_);
  }
  LineReader(const LineReader &) = delete;
  LineReader &operator=(const LineReader &) = delete;

  bool next(std::string *line) {
    if (plain_) return static_cast<bool>(std::getline(*plain_, *line));
    line->clear();
    char chunk[8192];
    while (gzgets(gz_, chunk, sizeof(chunk)) != nullptr) {
      line->append(chunk);
      if (!line->empty() && line->back() == '\n') {
        line->pop_back();
        return true;
      }
    }
    int errnum = 0;
    gzerror(gz_, &errnum);
    if (errnum != Z_OK) {
      throw Error(ErrorCode::kIoError, "gzip stream is truncated or corrupt");
    }
    return !line->empty();
  }

 private:
  gzFile gz_ = nullptr;
  std::unique_ptr<std::ifstream> plain_;
};

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

bool parse_double(std::string_view text, double *value) {
  auto [end, ec] =
      std::from_chars(text.data(), text.data() + text.size(), *value);
  return ec == std::errc() && end == text.data() + text.size() &&
         std::isfinite(*value);
}

std::optional<std::vector<double>> unit_vector(std::vector<double> v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  if (!(norm > 0.0) || !std::isfinite(norm)) return std::nullopt;
  for (double &x : v) x /= norm;
  return v;
}

std::vector<double> row_as_double(const EmbeddingStore &store,
                                  std::size_t row) {
  const auto v = store.vector(row);
  return std::vector<double>(v.begin(), v.end());
}

std::string join(const std::vector<std::string> &parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::optional<std::size_t> EmbeddingStore::find(std::string_view token) const {
  auto it = rows_.find(std::string(token));
  if (it == rows_.end()) return std::nullopt;
  return it->second;
}

EmbeddingStore::Builder::Builder(std::size_t dimension)
    : dimension_(dimension) {
  if (dimension == 0) {
    throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
  }
}

EmbeddingStore::Builder::AddResult EmbeddingStore::Builder::add(
    std::string token, std::span<const double> values) {
  if (values.size() != dimension_) return AddResult::kWrongDimension;
  if (rows_.count(token) > 0) return AddResult::kDuplicate;
  auto unit = unit_vector(std::vector<double>(values.begin(), values.end()));
  if (!unit) return AddResult::kZeroNorm;
  for (double x : *unit) values_.push_back(static_cast<float>(x));
  rows_.emplace(token, tokens_.size());
  tokens_.push_back(std::move(token));
  return AddResult::kAdded;
}

EmbeddingStore EmbeddingStore::Builder::build(std::string model_id) && {
  if (tokens_.empty()) {
    throw Error(ErrorCode::kEmptyVocabulary, "no vectors were added");
  }
  EmbeddingStore store;
  store.model_id_ = std::move(model_id);
  store.dimension_ = dimension_;
  store.folded_.reserve(tokens_.size());
  for (const std::string &token : tokens_) {
    store.folded_.push_back(case_fold(token));
  }
  store.tokens_ = std::move(tokens_);
  store.values_ = std::move(values_);
  store.rows_ = std::move(rows_);
  return store;
}

std::string model_id_for_path(std::string_view prefix, const fs::path &path) {
  fs::path name = path.filename();
  if (name.extension() == ".gz") name = name.stem();
  return std::string(prefix) + ":" + name.stem().string();
}

LoadedEmbeddings load_embeddings(const fs::path &path, std::string model_id) {
  if (model_id.empty()) model_id = model_id_for_path("emb", path);
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  }
  LineReader reader(path);

  EmbeddingLoadReport report;
  std::optional<EmbeddingStore::Builder> builder;
  std::string line;
  std::vector<double> values;
  std::size_t line_number = 0;

  const auto malformed = [&](const std::string &reason) {
    ++report.skipped_malformed;
    if (!report.first_malformed_line) {
      report.first_malformed_line = line_number;
      report.first_malformed_reason = reason;
    }
  };

  const auto next_line = [&]() {
    try {
      return reader.next(&line);
    } catch (const Error &e) {
      throw Error(e.code(), path.string() + " after line " +
                                std::to_string(line_number) + ": " + e.detail());
    }
  };

  while (next_line()) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = split_fields(line);
    if (fields.empty()) continue;
    ++report.lines;
    if (fields.size() < 2) {
      malformed("token without values");
      continue;
    }
    values.clear();
    bool ok = true;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      double value = 0.0;
      if (!parse_double(fields[i], &value)) {
        malformed("bad number '" + std::string(fields[i]) + "'");
        ok = false;
        break;
      }
      values.push_back(value);
    }
    if (!ok) continue;
    if (!builder) builder.emplace(values.size());
    if (values.size() != builder->dimension()) {
      malformed("expected " + std::to_string(builder->dimension()) +
                " values, found " + std::to_string(values.size()));
      continue;
    }
    switch (builder->add(std::string(fields[0]), values)) {
      case EmbeddingStore::Builder::AddResult::kAdded:
        break;
      case EmbeddingStore::Builder::AddResult::kZeroNorm:
        ++report.skipped_zero_norm;
        break;
      case EmbeddingStore::Builder::AddResult::kDuplicate:
        ++report.skipped_duplicate;
        break;
      case EmbeddingStore::Builder::AddResult::kWrongDimension:
        malformed("wrong dimension");
        break;
    }
  }

  if (!builder || builder->size() == 0) {
    throw Error(ErrorCode::kEmptyVocabulary,
                "no valid vectors in " + path.string());
  }
  return {std::move(*builder).build(std::move(model_id)), report};
}

std::optional<std::vector<double>> lookup_vector(const EmbeddingStore &store,
                                                 std::string_view surface) {
  if (auto row = store.find(surface)) return row_as_double(store, *row);

  const std::vector<std::string> words = split_whitespace(to_lower(surface));
  if (words.empty()) return std::nullopt;
  if (auto row = store.find(join(words, "_"))) {
    return row_as_double(store, *row);
  }

  std::vector<double> sum(store.dimension(), 0.0);
  bool any = false;
  for (const std::string &word : words) {
    if (auto row = store.find(word)) {
      const auto v = store.vector(*row);
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += v[j];
      any = true;
    }
  }
  if (!any) return std::nullopt;
  return unit_vector(std::move(sum));
}

std::vector<CandidateEntry> expand(const EmbeddingStore &store,
                                   const ExpansionRequest &request) {
  validate_request(request);

  struct Seed {
    std::string surface;
    std::vector<double> vector;
  };
  std::vector<Seed> seeds;
  for (const std::string &positive : request.positives) {
    if (auto v = lookup_vector(store, positive)) {
      seeds.push_back({positive, std::move(*v)});
    }
  }
  if (seeds.empty()) {
    throw Error(ErrorCode::kNoResolvableSeed,
                "none of the " + std::to_string(request.positives.size()) +
                    " seed(s) is in the vocabulary of " + store.model_id());
  }
  // Sorted so that a strict '>' keeps the smallest seed on ties.
  std::sort(seeds.begin(), seeds.end(),
            [](const Seed &a, const Seed &b) { return a.surface < b.surface; });
  seeds.erase(std::unique(seeds.begin(), seeds.end(),
                          [](const Seed &a, const Seed &b) {
                            return a.surface == b.surface;
                          }),
              seeds.end());

  std::unordered_set<std::string> excluded;
  for (const auto &s : request.positives) excluded.insert(case_fold(s));
  for (const auto &s : request.exclusions) excluded.insert(case_fold(s));

  struct Scored {
    std::size_t row;
    double score;
    std::size_t seed;
  };
  std::vector<Scored> scored;
  scored.reserve(store.size());
  const std::size_t dim = store.dimension();
  for (std::size_t row = 0; row < store.size(); ++row) {
    if (excluded.count(store.folded_token(row)) > 0) continue;
    const auto v = store.vector(row);
    double best = 0.0;
    std::size_t best_seed = 0;
    for (std::size_t s = 0; s < seeds.size(); ++s) {
      const double *seed = seeds[s].vector.data();
      double dot = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
        dot += static_cast<double>(v[j]) * seed[j];
      }
      dot = std::clamp(dot, -1.0, 1.0);
      if (s == 0 || dot > best) {
        best = dot;
        best_seed = s;
      }
    }
    scored.push_back({row, best, best_seed});
  }

  const std::size_t k = std::min(request.k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<long>(k),
                    scored.end(), [&](const Scored &a, const Scored &b) {
                      if (a.score != b.score) return a.score > b.score;
                      return store.token(a.row) < store.token(b.row);
                    });

  std::vector<CandidateEntry> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back({store.token(scored[i].row), scored[i].score,
                   seeds[scored[i].seed].surface, store.model_id()});
  }
  return out;
}

}  // namespace seedforge
