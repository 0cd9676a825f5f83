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

#ifndef SEEDFORGE_CATEGORY_H_
#define SEEDFORGE_CATEGORY_H_

#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "seedforge/candidate.h"

namespace seedforge {

inline constexpr double kDefaultMinSupport = 0.5;

// Bidirectional is-a index. Entity and category names are stored as given;
// seeds are matched against entities under case folding.
class CategoryIndex {
 public:
  using Pair = std::pair<std::string, std::string>;  // (entity, category)

  // Throws InvalidArgument on empty names, EmptyIndex when pairs is empty.
  // Duplicate pairs collapse.
  static CategoryIndex from_pairs(std::string model_id,
                                  std::span<const Pair> pairs);

  const std::string &model_id() const { return model_id_; }
  std::size_t pair_count() const { return pair_count_; }

  const std::map<std::string, std::set<std::string>> &entity_to_categories()
      const {
    return entity_to_categories_;
  }
  const std::map<std::string, std::set<std::string>> &category_to_entities()
      const {
    return category_to_entities_;
  }

  // Union of the categories of every entity that case-folds to surface.
  std::set<std::string> categories_of(std::string_view surface) const;
  // Empty set for unknown categories.
  const std::set<std::string> &members(std::string_view category) const;

 private:
  std::string model_id_;
  std::size_t pair_count_ = 0;
  std::map<std::string, std::set<std::string>> entity_to_categories_;
  std::map<std::string, std::set<std::string>> category_to_entities_;
  std::unordered_map<std::string, std::vector<std::string>> folded_entities_;
};

struct KbLoadReport {
  std::size_t lines = 0;  // non-comment, non-blank lines
  std::size_t duplicate_pairs = 0;
};

struct LoadedKb {
  CategoryIndex index;
  KbLoadReport report;
};

// Reads UTF-8 TSV `entity<TAB>category`; '#' lines and blank lines are
// ignored. Throws IoError, ParseError (with line), EmptyIndex. model_id
// defaults to model_id_for_path("cat", path).
LoadedKb load_kb(const std::filesystem::path &path, std::string model_id = {});

struct CategorySuggestion {
  std::string category;
  // matched_seeds / number of distinct seeds found in the KB.
  double support = 0.0;
  std::vector<std::string> matched_seeds;

  bool operator==(const CategorySuggestion &) const = default;
};

// Categories of the in-KB seeds whose support reaches min_support, ranked by
// support descending then category ascending. Seeds are de-duplicated under
// case folding. Throws InvalidArgument unless 0 < min_support <= 1.
std::vector<CategorySuggestion> suggest_categories(
    const CategoryIndex &index, std::span<const std::string> positives,
    double min_support = kDefaultMinSupport);

// Members of the suggested categories, in category rank order and ascending
// within a category. Anything whose folded form is already in the request or
// among earlier candidates is skipped. Score = category support, origin =
// category name. Truncated to k.
std::vector<CandidateEntry> expand_by_category(
    const CategoryIndex &index, const ExpansionRequest &request,
    double min_support = kDefaultMinSupport);

}  // namespace seedforge

#endif  // SEEDFORGE_CATEGORY_H_
