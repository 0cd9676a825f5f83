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

#include "seedforge/dictionary.h"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "json.hpp"
#include "seedforge/csv.h"
#include "seedforge/error.h"
#include "seedforge/text.h"

namespace seedforge {
namespace {

using OrderedJson = nlohmann::ordered_json;

constexpr std::string_view kUtf8Bom = "\xEF\xBB\xBF";

std::string_view strip_bom(std::string_view bytes) {
  if (bytes.substr(0, kUtf8Bom.size()) == kUtf8Bom) {
    bytes.remove_prefix(kUtf8Bom.size());
  }
  return bytes;
}

std::string format_score(double score) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), score,
                                 std::chars_format::fixed, 6);
  return std::string(buffer, end);
}

double round_score(double score) {
  const std::string text = format_score(score);
  double rounded = 0.0;
  std::from_chars(text.data(), text.data() + text.size(), rounded);
  return rounded;
}

std::optional<std::string> optional_text(std::string_view field) {
  if (field.empty()) return std::nullopt;
  return std::string(field);
}

// Splits into lines, dropping a trailing CR on each.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool is_comment_or_blank(std::string_view line) {
  const std::string trimmed = trim(line);
  return trimmed.empty() || trimmed.front() == '#';
}

Dictionary import_seeds(std::string_view text) {
  Dictionary dict;
  std::size_t line_number = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_number;
    if (is_comment_or_blank(line)) continue;
    try {
      dict = add_entity(dict, line, Label::kPositive);
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kDuplicateEntity) {
        throw Error::parse_at_line(line_number, e.detail());
      }
      throw Error(ErrorCode::kDuplicateEntity,
                  "line " + std::to_string(line_number) + ": " + e.detail());
    }
  }
  return dict;
}

bool parse_bool(std::string_view text, bool *value) {
  if (text == "true" || text == "1") {
    *value = true;
    return true;
  }
  if (text == "false" || text == "0") {
    *value = false;
    return true;
  }
  return false;
}

template <typename T>
bool parse_number(std::string_view text, T *value) {
  if (text.empty()) return false;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   *value);
  return ec == std::errc() && end == text.data() + text.size();
}

// first_line is the 1-based line of text[0] within the original input.
Dictionary import_csv(std::string_view text, std::size_t first_line) {
  std::vector<csv::Record> records = csv::parse(text);
  for (csv::Record &record : records) record.line += first_line - 1;
  std::vector<EntityEntry> entries;
  entries.reserve(records.empty() ? 0 : records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const csv::Record &record = records[r];
    const auto fail = [&](const std::string &what) {
      return Error::parse_at_line(record.line, what);
    };
    if (record.fields.size() != 7) {
      throw fail("expected 7 fields, found " +
                 std::to_string(record.fields.size()));
    }
    const auto &f = record.fields;
    EntityEntry entry;
    entry.surface = f[0];
    try {
      entry.label = parse_label(f[1]);
    } catch (const Error &) {
      throw fail("bad label '" + f[1] + "'");
    }
    entry.origin = optional_text(f[2]);
    if (!f[3].empty()) {
      double score = 0.0;
      if (!parse_number(f[3], &score)) throw fail("bad score '" + f[3] + "'");
      entry.score = score;
    }
    if (!parse_bool(f[4], &entry.active)) {
      throw fail("bad active flag '" + f[4] + "'");
    }
    entry.model = optional_text(f[5]);
    if (!parse_number(f[6], &entry.iteration)) {
      throw fail("bad iteration '" + f[6] + "'");
    }
    try {
      entries.push_back(canonical_entry(std::move(entry)));
    } catch (const Error &e) {
      throw fail(e.detail());
    }
  }
  return Dictionary::from_entries(std::move(entries));
}

Dictionary import_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error::parse_at_offset(e.byte, e.what());
  }
  return dictionary_from_json(doc);
}

OrderedJson entry_to_json(const EntityEntry &entry) {
  OrderedJson out;
  out["surface"] = entry.surface;
  out["label"] = std::string(label_name(entry.label));
  out["origin"] = entry.origin ? OrderedJson(*entry.origin) : OrderedJson();
  out["score"] = entry.score ? OrderedJson(*entry.score) : OrderedJson();
  out["active"] = entry.active;
  out["model"] = entry.model ? OrderedJson(*entry.model) : OrderedJson();
  out["iteration"] = entry.iteration;
  return out;
}

}  // namespace

Dictionary dictionary_from_json(const nlohmann::json &doc) {
  if (!doc.is_object() || !doc.contains("entries") ||
      !doc["entries"].is_array()) {
    throw Error(ErrorCode::kParseError,
                "expected an object with an \"entries\" array");
  }
  std::vector<EntityEntry> entries;
  std::size_t i = 0;
  for (const auto &item : doc["entries"]) {
    const std::string where = "entries[" + std::to_string(i++) + "]";
    const auto fail = [&](const std::string &what) {
      return Error(ErrorCode::kParseError, where + ": " + what);
    };
    if (!item.is_object()) throw fail("not an object");
    EntityEntry entry;
    if (!item.contains("surface") || !item["surface"].is_string()) {
      throw fail("surface must be a string");
    }
    entry.surface = item["surface"].get<std::string>();
    if (!item.contains("label") || !item["label"].is_string()) {
      throw fail("label must be a string");
    }
    try {
      entry.label = parse_label(item["label"].get<std::string>());
    } catch (const Error &e) {
      throw fail(e.detail());
    }
    const auto optional_string = [&](const char *key)
        -> std::optional<std::string> {
      if (!item.contains(key) || item[key].is_null()) return std::nullopt;
      if (!item[key].is_string()) throw fail(std::string(key) + " must be a string or null");
      return optional_text(item[key].get<std::string>());
    };
    entry.origin = optional_string("origin");
    entry.model = optional_string("model");
    if (item.contains("score") && !item["score"].is_null()) {
      if (!item["score"].is_number()) throw fail("score must be a number or null");
      entry.score = item["score"].get<double>();
    }
    if (item.contains("active")) {
      if (!item["active"].is_boolean()) throw fail("active must be a boolean");
      entry.active = item["active"].get<bool>();
    }
    if (item.contains("iteration")) {
      if (!item["iteration"].is_number_unsigned()) {
        throw fail("iteration must be a nonnegative integer");
      }
      entry.iteration = item["iteration"].get<std::uint32_t>();
    }
    try {
      entries.push_back(canonical_entry(std::move(entry)));
    } catch (const Error &e) {
      throw fail(e.detail());
    }
  }
  return Dictionary::from_entries(std::move(entries));
}

OrderedJson dictionary_to_json(const Dictionary &dict) {
  OrderedJson entries = OrderedJson::array();
  for (const EntityEntry &entry : dict.entries()) {
    entries.push_back(entry_to_json(entry));
  }
  OrderedJson doc;
  doc["entries"] = std::move(entries);
  return doc;
}

std::string_view label_name(Label label) {
  return label == Label::kPositive ? "positive" : "negative";
}

Label parse_label(std::string_view text) {
  if (text == "positive" || text == "+") return Label::kPositive;
  if (text == "negative" || text == "-") return Label::kNegative;
  throw Error(ErrorCode::kInvalidArgument,
              "label must be positive or negative, got '" + std::string(text) +
                  "'");
}

EntityEntry canonical_entry(EntityEntry entry) {
  entry.surface = trim(entry.surface);
  if (entry.surface.empty()) {
    throw Error(ErrorCode::kEmptySurface, "surface is blank");
  }
  if (!is_valid_utf8(entry.surface)) {
    throw Error(ErrorCode::kInvalidArgument, "surface is not valid UTF-8");
  }
  if (entry.origin && entry.origin->empty()) entry.origin.reset();
  if (entry.model && entry.model->empty()) entry.model.reset();
  if ((entry.origin && !is_valid_utf8(*entry.origin)) ||
      (entry.model && !is_valid_utf8(*entry.model))) {
    throw Error(ErrorCode::kInvalidArgument, "origin/model not valid UTF-8");
  }
  if (entry.score) {
    if (!std::isfinite(*entry.score) || *entry.score < -1.0 ||
        *entry.score > 1.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "score must lie in [-1, 1], got " + format_score(*entry.score));
    }
    entry.score = round_score(*entry.score);
  }
  return entry;
}

Dictionary Dictionary::from_entries(std::vector<EntityEntry> entries) {
  Dictionary dict;
  dict.entries_.reserve(entries.size());
  for (EntityEntry &raw : entries) {
    EntityEntry entry = canonical_entry(std::move(raw));
    std::string key = case_fold(entry.surface);
    if (dict.index_.count(key) > 0) {
      throw Error(ErrorCode::kDuplicateEntity,
                  "'" + entry.surface + "' collides with '" +
                      dict.entries_[dict.index_[key]].surface + "'");
    }
    dict.index_.emplace(std::move(key), dict.entries_.size());
    dict.entries_.push_back(std::move(entry));
  }
  return dict;
}

std::optional<std::size_t> Dictionary::position(std::string_view surface) const {
  auto it = index_.find(case_fold(trim(surface)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const EntityEntry *Dictionary::find(std::string_view surface) const {
  auto pos = position(surface);
  return pos ? &entries_[*pos] : nullptr;
}

void Dictionary::reindex() {
  index_.clear();
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    index_.emplace(case_fold(entries_[i].surface), i);
  }
}

Dictionary add_entity(const Dictionary &dict, std::string_view surface,
                      Label label, std::uint32_t iteration) {
  EntityEntry entry;
  entry.surface = std::string(surface);
  entry.label = label;
  entry.iteration = iteration;
  return append_entry(dict, std::move(entry));
}

Dictionary append_entry(const Dictionary &dict, EntityEntry entry) {
  entry = canonical_entry(std::move(entry));
  std::string key = case_fold(entry.surface);
  if (auto it = dict.index_.find(key); it != dict.index_.end()) {
    throw Error(ErrorCode::kDuplicateEntity,
                "'" + entry.surface + "' collides with '" +
                    dict.entries_[it->second].surface + "'");
  }
  Dictionary out = dict;
  out.index_.emplace(std::move(key), out.entries_.size());
  out.entries_.push_back(std::move(entry));
  return out;
}

Dictionary rename_entity(const Dictionary &dict, std::string_view old_surface,
                         std::string_view new_surface) {
  const auto pos = dict.position(old_surface);
  if (!pos) {
    throw Error(ErrorCode::kNotFound,
                "no entity '" + std::string(old_surface) + "'");
  }
  EntityEntry renamed = dict.entries_[*pos];
  renamed.surface = std::string(new_surface);
  renamed = canonical_entry(std::move(renamed));
  const auto clash = dict.position(renamed.surface);
  if (clash && *clash != *pos) {
    throw Error(ErrorCode::kDuplicateEntity,
                "'" + renamed.surface + "' collides with '" +
                    dict.entries_[*clash].surface + "'");
  }
  Dictionary out = dict;
  out.entries_[*pos] = std::move(renamed);
  out.reindex();
  return out;
}

Dictionary delete_entity(const Dictionary &dict, std::string_view surface) {
  const auto pos = dict.position(surface);
  if (!pos) {
    throw Error(ErrorCode::kNotFound,
                "no entity '" + std::string(surface) + "'");
  }
  Dictionary out = dict;
  out.entries_.erase(out.entries_.begin() +
                     static_cast<std::ptrdiff_t>(*pos));
  out.reindex();
  return out;
}

Dictionary set_active(const Dictionary &dict, std::string_view surface,
                      bool active) {
  const auto pos = dict.position(surface);
  if (!pos) {
    throw Error(ErrorCode::kNotFound,
                "no entity '" + std::string(surface) + "'");
  }
  Dictionary out = dict;
  out.entries_[*pos].active = active;
  return out;
}

std::vector<std::string> active_positive_set(const Dictionary &dict) {
  std::vector<std::string> surfaces;
  for (const EntityEntry &entry : dict.entries()) {
    if (entry.active && entry.label == Label::kPositive) {
      surfaces.push_back(entry.surface);
    }
  }
  return surfaces;
}

std::vector<std::string> all_surfaces(const Dictionary &dict) {
  std::vector<std::string> surfaces;
  surfaces.reserve(dict.size());
  for (const EntityEntry &entry : dict.entries()) {
    surfaces.push_back(entry.surface);
  }
  return surfaces;
}

DictionaryFormat parse_dictionary_format(std::string_view name) {
  if (name == "csv") return DictionaryFormat::kCsv;
  if (name == "json") return DictionaryFormat::kJson;
  if (name == "seeds" || name == "txt") return DictionaryFormat::kSeeds;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown format '" + std::string(name) + "'");
}

std::string export_dictionary(const Dictionary &dict, DictionaryFormat format) {
  if (format == DictionaryFormat::kJson) {
    return dictionary_to_json(dict).dump(2) + "\n";
  }
  if (format != DictionaryFormat::kCsv) {
    throw Error(ErrorCode::kInvalidArgument, "export supports csv or json");
  }
  std::string out(kCsvHeader);
  out += '\n';
  for (const EntityEntry &entry : dict.entries()) {
    out += csv::format_record({
        entry.surface,
        std::string(label_name(entry.label)),
        entry.origin.value_or(""),
        entry.score ? format_score(*entry.score) : "",
        entry.active ? "true" : "false",
        entry.model.value_or(""),
        std::to_string(entry.iteration),
    });
  }
  return out;
}

Dictionary import_dictionary(std::string_view bytes, DictionaryFormat format) {
  bytes = strip_bom(bytes);
  switch (format) {
    case DictionaryFormat::kJson:
      return import_json(bytes);
    case DictionaryFormat::kSeeds:
      return import_seeds(bytes);
    case DictionaryFormat::kCsv:
      break;
  }
  for (std::string_view line : split_lines(bytes)) {
    if (is_comment_or_blank(line)) continue;
    if (line == kCsvHeader) {
      // Comment lines may precede the header; parse from the header on.
      const auto offset = static_cast<std::size_t>(line.data() - bytes.data());
      const std::string_view tail = bytes.substr(offset);
      const std::size_t skipped =
          static_cast<std::size_t>(std::count(bytes.begin(), bytes.begin() + offset, '\n'));
      return import_csv(tail, skipped + 1);
    }
    break;
  }
  return import_seeds(bytes);
}

}  // namespace seedforge
