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

#ifndef SEEDFORGE_HIGHLIGHT_H_
#define SEEDFORGE_HIGHLIGHT_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seedforge {

struct HighlightOptions {
  bool case_insensitive = true;
  // Both match edges must touch a non-alphanumeric character or the
  // document edge.
  bool word_boundary = true;
};

// Byte range [start, end) of the UTF-8 document and the dictionary surface
// that matched there.
struct HighlightSpan {
  std::size_t start = 0;
  std::size_t end = 0;
  std::string surface;

  bool operator==(const HighlightSpan &) const = default;
};

// Gazetteer over a fixed entity list. Matching is leftmost-longest and
// non-overlapping: scanning left to right, the longest entity that matches
// at a position wins and scanning resumes at its end. When several entities
// are equal after folding, the first one in the list names the span.
class Highlighter {
 public:
  Highlighter(std::span<const std::string> entities, HighlightOptions options);

  std::vector<HighlightSpan> find(std::string_view document) const;

 private:
  struct Node {
    std::map<char32_t, int> next;
    int entity = -1;
  };

  HighlightOptions options_;
  std::vector<std::string> surfaces_;
  std::vector<Node> nodes_;
};

std::vector<HighlightSpan> highlight(std::string_view document,
                                     std::span<const std::string> entities,
                                     HighlightOptions options = {});

enum class AnnotationFormat { kHtml, kJson };

// Throws InvalidSpan unless each span is a nonempty range on character
// boundaries inside the document. Spans must be sorted and disjoint.
void validate_spans(std::string_view document,
                    std::span<const HighlightSpan> spans);

// html: text is entity-escaped and each span becomes
//   <mark data-entity="SURFACE">TEXT</mark>
// json: {"document": ..., "spans": [{"start","end","surface"}...]}
std::string render_annotated(std::string_view document,
                             std::span<const HighlightSpan> spans,
                             AnnotationFormat format);

std::string html_escape(std::string_view text);

}  // namespace seedforge

#endif  // SEEDFORGE_HIGHLIGHT_H_
