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

#include "seedforge/highlight.h"

#include <vector>

#include "json.hpp"
#include "seedforge/error.h"
#include "seedforge/text.h"

namespace seedforge {

Highlighter::Highlighter(std::span<const std::string> entities,
                         HighlightOptions options)
    : options_(options), surfaces_(entities.begin(), entities.end()) {
  nodes_.emplace_back();
  for (std::size_t e = 0; e < surfaces_.size(); ++e) {
    const auto units = decode_utf8(surfaces_[e]);
    if (units.empty()) continue;
    int node = 0;
    for (const Utf8Unit &unit : units) {
      const char32_t key =
          options_.case_insensitive ? fold_code_point(unit.value) : unit.value;
      auto it = nodes_[node].next.find(key);
      if (it == nodes_[node].next.end()) {
        const int child = static_cast<int>(nodes_.size());
        nodes_[node].next.emplace(key, child);
        nodes_.emplace_back();
        node = child;
      } else {
        node = it->second;
      }
    }
    if (nodes_[node].entity < 0) nodes_[node].entity = static_cast<int>(e);
  }
}

std::vector<HighlightSpan> Highlighter::find(std::string_view document) const {
  std::vector<HighlightSpan> spans;
  if (nodes_.size() == 1) return spans;

  const std::vector<Utf8Unit> units = decode_utf8(document);
  const std::size_t n = units.size();
  const auto boundary_before = [&](std::size_t i) {
    return i == 0 || !is_alnum(units[i - 1].value);
  };
  const auto boundary_after = [&](std::size_t j) {
    return j == n || !is_alnum(units[j].value);
  };

  std::size_t i = 0;
  while (i < n) {
    if (options_.word_boundary && !boundary_before(i)) {
      ++i;
      continue;
    }
    int node = 0;
    int best_entity = -1;
    std::size_t best_end = i;
    for (std::size_t j = i; j < n; ++j) {
      const char32_t key = options_.case_insensitive
                               ? fold_code_point(units[j].value)
                               : units[j].value;
      auto it = nodes_[node].next.find(key);
      if (it == nodes_[node].next.end()) break;
      node = it->second;
      if (nodes_[node].entity >= 0 &&
          (!options_.word_boundary || boundary_after(j + 1))) {
        best_entity = nodes_[node].entity;
        best_end = j + 1;
      }
    }
    if (best_entity < 0) {
      ++i;
      continue;
    }
    const Utf8Unit &last = units[best_end - 1];
    spans.push_back({units[i].offset, last.offset + last.length,
                     surfaces_[static_cast<std::size_t>(best_entity)]});
    i = best_end;
  }
  return spans;
}

std::vector<HighlightSpan> highlight(std::string_view document,
                                     std::span<const std::string> entities,
                                     HighlightOptions options) {
  return Highlighter(entities, options).find(document);
}

void validate_spans(std::string_view document,
                    std::span<const HighlightSpan> spans) {
  std::vector<bool> boundary(document.size() + 1, false);
  for (const Utf8Unit &unit : decode_utf8(document)) {
    boundary[unit.offset] = true;
  }
  boundary[document.size()] = true;

  std::size_t previous_end = 0;
  for (std::size_t s = 0; s < spans.size(); ++s) {
    const HighlightSpan &span = spans[s];
    const std::string where = "span " + std::to_string(s) + " [" +
                              std::to_string(span.start) + ", " +
                              std::to_string(span.end) + ")";
    if (span.start >= span.end || span.end > document.size()) {
      throw Error(ErrorCode::kInvalidSpan, where + " is empty or out of range");
    }
    if (!boundary[span.start] || !boundary[span.end]) {
      throw Error(ErrorCode::kInvalidSpan,
                  where + " splits a UTF-8 character");
    }
    if (s > 0 && span.start < previous_end) {
      throw Error(ErrorCode::kInvalidSpan,
                  where + " overlaps or precedes the previous span");
    }
    previous_end = span.end;
  }
}

std::string html_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string render_annotated(std::string_view document,
                             std::span<const HighlightSpan> spans,
                             AnnotationFormat format) {
  validate_spans(document, spans);

  if (format == AnnotationFormat::kJson) {
    nlohmann::ordered_json doc;
    doc["document"] = std::string(document);
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const HighlightSpan &span : spans) {
      items.push_back(
          {{"start", span.start}, {"end", span.end}, {"surface", span.surface}});
    }
    doc["spans"] = std::move(items);
    try {
      return doc.dump();
    } catch (const nlohmann::json::type_error &e) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("document is not valid UTF-8: ") + e.what());
    }
  }

  std::string out;
  std::size_t cursor = 0;
  for (const HighlightSpan &span : spans) {
    out += html_escape(document.substr(cursor, span.start - cursor));
    out += "<mark data-entity=\"";
    out += html_escape(span.surface);
    out += "\">";
    out += html_escape(document.substr(span.start, span.end - span.start));
    out += "</mark>";
    cursor = span.end;
  }
  out += html_escape(document.substr(cursor));
  return out;
}

}  // namespace seedforge
