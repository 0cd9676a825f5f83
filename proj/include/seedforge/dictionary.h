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

#ifndef SEEDFORGE_DICTIONARY_H_
#define SEEDFORGE_DICTIONARY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace seedforge {

enum class Label { kPositive, kNegative };

std::string_view label_name(Label label);
// Accepts "positive"/"negative" (also "+"/"-"); throws InvalidArgument.
Label parse_label(std::string_view text);

// One row of the entity table. Only rows created from feedback carry
// provenance; manual rows leave the optional fields empty.
struct EntityEntry {
  std::string surface;
  Label label = Label::kPositive;
  std::optional<std::string> origin;
  std::optional<double> score;
  bool active = true;
  std::optional<std::string> model;
  std::uint32_t iteration = 0;

  bool operator==(const EntityEntry &) const = default;
};

// Puts an entry in canonical form: surface trimmed (EmptySurface if blank),
// empty origin/model collapsed to absent, score rounded to 6 decimals and
// checked to lie in [-1, 1] (InvalidArgument otherwise).
EntityEntry canonical_entry(EntityEntry entry);

// Ordered entity table with case-folded surface uniqueness. Values are
// immutable; the free functions below return modified copies.
class Dictionary {
 public:
  Dictionary() = default;

  // Canonicalizes each entry; throws DuplicateEntity on a case-folded
  // collision.
  static Dictionary from_entries(std::vector<EntityEntry> entries);

  const std::vector<EntityEntry> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Case-folded lookup.
  const EntityEntry *find(std::string_view surface) const;
  bool contains(std::string_view surface) const {
    return find(surface) != nullptr;
  }

  bool operator==(const Dictionary &other) const {
    return entries_ == other.entries_;
  }

 private:
  friend Dictionary append_entry(const Dictionary &, EntityEntry);
  friend Dictionary rename_entity(const Dictionary &, std::string_view,
                                  std::string_view);
  friend Dictionary delete_entity(const Dictionary &, std::string_view);
  friend Dictionary set_active(const Dictionary &, std::string_view, bool);

  std::optional<std::size_t> position(std::string_view surface) const;
  void reindex();

  std::vector<EntityEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Appends a manual entry (active, no provenance).
Dictionary add_entity(const Dictionary &dict, std::string_view surface,
                      Label label, std::uint32_t iteration = 0);

// Appends an arbitrary entry after canonicalization.
Dictionary append_entry(const Dictionary &dict, EntityEntry entry);

// Errors: NotFound, EmptySurface, DuplicateEntity. Renaming to a different
// casing of the same surface is allowed.
Dictionary rename_entity(const Dictionary &dict, std::string_view old_surface,
                         std::string_view new_surface);
Dictionary delete_entity(const Dictionary &dict, std::string_view surface);
Dictionary set_active(const Dictionary &dict, std::string_view surface,
                      bool active);

// Surfaces with label positive and active set, in insertion order. This is
// the seed set sent to expansion models.
std::vector<std::string> active_positive_set(const Dictionary &dict);

// Every surface in the table, any label, any active state.
std::vector<std::string> all_surfaces(const Dictionary &dict);

enum class DictionaryFormat { kCsv, kJson, kSeeds };

// Throws InvalidArgument for unknown names.
DictionaryFormat parse_dictionary_format(std::string_view name);

inline constexpr std::string_view kCsvHeader =
    "surface,label,origin,score,active,model,iteration";

// Serializes every entry in insertion order. kSeeds is not an export format.
std::string export_dictionary(const Dictionary &dict, DictionaryFormat format);

// {"entries":[{surface,label,origin,score,active,model,iteration}...]}, absent
// optionals as null.
nlohmann::ordered_json dictionary_to_json(const Dictionary &dict);
// Throws ParseError on structural problems, DuplicateEntity on collisions.
Dictionary dictionary_from_json(const nlohmann::json &doc);

// kCsv also accepts the plain seed form when the first non-comment line is
// not the header. Throws ParseError with a line (csv, seeds) or byte offset
// (json), DuplicateEntity on case-folded collisions.
Dictionary import_dictionary(std::string_view bytes, DictionaryFormat format);

}  // namespace seedforge

#endif  // SEEDFORGE_DICTIONARY_H_
