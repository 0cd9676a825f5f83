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

#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "oracles/highlight_oracle.h"
#include "seedforge/error.h"
#include "seedforge/highlight.h"
#include "seedforge/text.h"
#include "support/test_support.h"

using namespace seedforge;
using seedforge::testing::Rng;

TEST_SUITE("highlight") {

TEST_CASE("longest entity wins at a position") {
  const std::vector<std::string> entities = {"countertop", "granite countertop"};
  const auto spans = highlight("a granite countertop", entities);
  REQUIRE(spans.size() == 1);
  CHECK(spans[0].start == 2);
  CHECK(spans[0].end == 20);
  CHECK(spans[0].surface == "granite countertop");
  CHECK(highlight("anything", {}).empty());
}

TEST_CASE("word boundaries and case") {
  const std::vector<std::string> entities = {"bath"};
  CHECK(highlight("bathroom", entities).empty());
  CHECK(highlight("BATH.", entities).size() == 1);
  CHECK(highlight("BATH", entities, {false, true}).empty());
  CHECK(highlight("bathroom", entities, {true, false}).size() == 1);
  // Non-ASCII letters count as word characters.
  CHECK(highlight("ébath", entities).empty());
  const std::vector<std::string> greek = {"σοφία"};
  const auto g = highlight("Η ΣΟΦΊΑ!", greek);
  REQUIRE(g.size() == 1);
  CHECK(g[0].start == 3);
}

TEST_CASE("rendering") {
  CHECK(render_annotated("a<b", {}, AnnotationFormat::kHtml) == "a&lt;b");
  const std::vector<std::string> entities = {"R&D"};
  const std::string doc = "the R&D lab";
  const auto spans = highlight(doc, entities);
  const std::string html = render_annotated(doc, spans, AnnotationFormat::kHtml);
  CHECK(html == "the <mark data-entity=\"R&amp;D\">R&amp;D</mark> lab");
  const auto json = nlohmann::json::parse(
      render_annotated(doc, spans, AnnotationFormat::kJson));
  CHECK(json["document"] == doc);
  CHECK(json["spans"][0]["start"] == 4);

  const std::vector<HighlightSpan> overlapping = {{0, 3, "x"}, {2, 4, "y"}};
  CHECK_THROWS_AS(render_annotated(doc, overlapping, AnnotationFormat::kHtml),
                  Error);
  const std::vector<HighlightSpan> split_char = {{1, 2, "x"}};
  CHECK_THROWS_AS(render_annotated("é", split_char, AnnotationFormat::kHtml),
                  Error);
}

TEST_CASE("fuzzed documents agree with the naive matcher") {
  Rng rng(314);
  const std::vector<std::string> alphabet = {"a", "b", "A", "B", " ", "-", "é",
                                             "É", "ß", "<", "&", "\"", "'", "中"};
  const auto text = [&](std::size_t lo, std::size_t hi) {
    std::string s;
    for (std::size_t n = rng.uniform(lo, hi); n > 0; --n) s += rng.pick(alphabet);
    return s;
  };
  for (int i = 0; i < 100; ++i) {
    std::vector<std::string> entities;
    for (std::size_t n = rng.uniform(0, 20); n > 0; --n) entities.push_back(text(1, 5));
    const std::string doc = text(0, 400);
    const HighlightOptions opts{rng.chance(0.7), rng.chance(0.7)};
    const auto spans = highlight(doc, entities, opts);
    CHECK(spans == oracle::naive_highlight(doc, entities, opts));
    const std::string html = render_annotated(doc, spans, AnnotationFormat::kHtml);
    CHECK(oracle::strip_markup(html) == doc);
  }
}

}  // TEST_SUITE
