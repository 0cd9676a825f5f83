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

#include "seedforge/category.h"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "seedforge/embedding.h"
#include "seedforge/error.h"
#include "seedforge/text.h"

namespace seedforge {

CategoryIndex CategoryIndex::from_pairs(std::string model_id,
                                        std::span<const Pair> pairs) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kEmptyIndex, "no is-a pairs");
  }
  CategoryIndex index;
  index.model_id_ = std::move(model_id);
  for (const auto &[entity, category] : pairs) {
    if (entity.empty() || category.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "entity and category names must be nonempty");
    }
    if (index.entity_to_categories_[entity].insert(category).second) {
      ++index.pair_count_;
    }
    index.category_to_entities_[category].insert(entity);
  }
  for (const auto &[entity, categories] : index.entity_to_categories_) {
    index.folded_entities_[case_fold(entity)].push_back(entity);
  }
  return index;
}

std::set<std::string> CategoryIndex::categories_of(
    std::string_view surface) const {
  std::set<std::string> out;
  auto it = folded_entities_.find(case_fold(trim(surface)));
  if (it == folded_entities_.end()) return out;
  for (const std::string &entity : it->second) {
    const auto &categories = entity_to_categories_.at(entity);
    out.insert(categories.begin(), categories.end());
  }
  return out;
}

const std::set<std::string> &CategoryIndex::members(
    std::string_view category) const {
  static const std::set<std::string> kEmpty;
  auto it = category_to_entities_.find(std::string(category));
  return it == category_to_entities_.end() ? kEmpty : it->second;
}

LoadedKb load_kb(const std::filesystem::path &path, std::string model_id) {
  if (model_id.empty()) model_id = model_id_for_path("cat", path);
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());

  KbLoadReport report;
  std::vector<CategoryIndex::Pair> pairs;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    ++report.lines;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error::parse_at_line(line_number, "expected entity<TAB>category");
    }
    if (line.find('\t', tab + 1) != std::string::npos) {
      throw Error::parse_at_line(line_number, "more than two columns");
    }
    std::string entity = trim(std::string_view(line).substr(0, tab));
    std::string category = trim(std::string_view(line).substr(tab + 1));
    if (entity.empty() || category.empty()) {
      throw Error::parse_at_line(line_number, "empty entity or category");
    }
    if (!is_valid_utf8(entity) || !is_valid_utf8(category)) {
      throw Error::parse_at_line(line_number, "not valid UTF-8");
    }
    pairs.emplace_back(std::move(entity), std::move(category));
  }
  if (pairs.empty()) {
    throw Error(ErrorCode::kEmptyIndex, "no is-a pairs in " + path.string());
  }
  CategoryIndex index = CategoryIndex::from_pairs(std::move(model_id), pairs);
  report.duplicate_pairs = pairs.size() - index.pair_count();
  return {std::move(index), report};
}

std::vector<CategorySuggestion> suggest_categories(
    const CategoryIndex &index, std::span<const std::string> positives,
    double min_support) {
  if (!(min_support > 0.0 && min_support <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "min_support must be in (0, 1]");
  }

  std::unordered_set<std::string> seen;
  std::size_t found = 0;
  std::map<std::string, std::vector<std::string>> matches;
  for (const std::string &seed : positives) {
    if (!seen.insert(case_fold(trim(seed))).second) continue;
    const std::set<std::string> categories = index.categories_of(seed);
    if (categories.empty()) continue;
    ++found;
    for (const std::string &category : categories) {
      matches[category].push_back(seed);
    }
  }
  if (found == 0) return {};

  std::vector<CategorySuggestion> out;
  for (auto &[category, seeds] : matches) {
    const double support =
        static_cast<double>(seeds.size()) / static_cast<double>(found);
    if (support >= min_support) {
      out.push_back({category, support, std::move(seeds)});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const CategorySuggestion &a, const CategorySuggestion &b) {
                     if (a.support != b.support) return a.support > b.support;
                     return a.category < b.category;
                   });
  return out;
}

std::vector<CandidateEntry> expand_by_category(const CategoryIndex &index,
                                               const ExpansionRequest &request,
                                               double min_support) {
  validate_request(request);
  const auto suggestions =
      suggest_categories(index, request.positives, min_support);

  std::unordered_set<std::string> taken;
  for (const auto &s : request.positives) taken.insert(case_fold(trim(s)));
  for (const auto &s : request.exclusions) taken.insert(case_fold(trim(s)));

  std::vector<CandidateEntry> out;
  for (const CategorySuggestion &suggestion : suggestions) {
    for (const std::string &member : index.members(suggestion.category)) {
      if (out.size() == request.k) return out;
      if (!taken.insert(case_fold(member)).second) continue;
      out.push_back(
          {member, suggestion.support, suggestion.category, index.model_id()});
    }
  }
  return out;
}

}  // namespace seedforge
