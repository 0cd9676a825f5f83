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

#include <memory>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "seedforge/embedding.h"
#include "seedforge/error.h"
#include "seedforge/service.h"
#include "seedforge/text.h"
#include "support/test_support.h"

using namespace seedforge;
using seedforge::testing::Rng;
using seedforge::testing::TempDir;

namespace {

// Returns a fixed list, minus anything excluded, cut to k.
class StubBackend : public ExpansionBackend {
 public:
  StubBackend(ModelKind kind, std::vector<CandidateEntry> list)
      : kind_(kind), list_(std::move(list)) {}
  ModelKind kind() const override { return kind_; }
  std::vector<CandidateEntry> expand(const ExpansionRequest &req) const override {
    std::set<std::string> banned;
    for (const auto &s : req.positives) banned.insert(case_fold(s));
    for (const auto &s : req.exclusions) banned.insert(case_fold(s));
    std::vector<CandidateEntry> out;
    for (const auto &c : list_) {
      if (out.size() < req.k && !banned.count(case_fold(c.surface))) out.push_back(c);
    }
    return out;
  }

 private:
  ModelKind kind_;
  std::vector<CandidateEntry> list_;
};

ErrorCode code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvalidArgument;
}

std::shared_ptr<EmbeddingBackend> random_embedding(Rng &rng, std::size_t n) {
  EmbeddingStore::Builder b(6);
  while (b.size() < n) {
    std::vector<double> v(6);
    for (double &x : v) x = rng.normal();
    b.add("w" + std::to_string(b.size()), v);
  }
  return std::make_shared<EmbeddingBackend>(
      std::make_shared<const EmbeddingStore>(std::move(b).build("emb:r")));
}

}  // namespace

TEST_SUITE("service") {

TEST_CASE("merge keeps the higher score per surface") {
  const std::vector<ModelResult> results = {
      {"emb:a", ModelKind::kEmbedding, {{"X", 0.9, "s", "emb:a"}, {"y", 0.2, "s", "emb:a"}}},
      {"cat:b", ModelKind::kCategory, {{"x", 0.4, "c", "cat:b"}, {"z", 0.5, "c", "cat:b"}}}};
  const auto merged = merge_candidates(results, 10);
  REQUIRE(merged.size() == 3);
  CHECK(merged[0] == CandidateEntry{"X", 0.9, "s", "emb:a"});
  CHECK(merged[1].surface == "z");
  CHECK(merged[2].surface == "y");
  CHECK(merge_candidates(results, 1).size() == 1);

  const std::vector<ModelResult> tie = {
      {"cat:a", ModelKind::kCategory, {{"x", 0.5, "c", "cat:a"}}},
      {"emb:z", ModelKind::kEmbedding, {{"x", 0.5, "s", "emb:z"}}},
      {"emb:b", ModelKind::kEmbedding, {{"x", 0.5, "t", "emb:b"}}}};
  CHECK(merge_candidates(tie, 5)[0].model == "emb:b");

  // Merging a list with itself changes nothing.
  const std::vector<ModelResult> single = {results[0]};
  const auto once = merge_candidates(single, 10);
  const std::vector<ModelResult> twice = {
      {"emb:a", ModelKind::kEmbedding, once}, {"emb:a", ModelKind::kEmbedding, once}};
  CHECK(merge_candidates(twice, 10) == once);
}

TEST_CASE("stateless expand validation and merge through the service") {
  TempDir dir;
  ModelRegistry reg;
  reg.add("emb:a", std::make_shared<StubBackend>(
                       ModelKind::kEmbedding,
                       std::vector<CandidateEntry>{{"x", 0.9, "s", "?"}, {"seed", 1, "s", "?"}}));
  reg.add("cat:b", std::make_shared<StubBackend>(
                       ModelKind::kCategory,
                       std::vector<CandidateEntry>{{"x", 0.4, "c", "?"}, {"w", 0.3, "c", "?"}}));
  reg.add("emb:down", std::make_shared<UnavailableBackend>(ModelKind::kEmbedding, "gone"));
  WorkbenchService svc(std::move(reg), SessionStore(dir.path()));

  CHECK(svc.models().size() == 3);
  const auto out = svc.expand({"seed"}, {"emb:a", "cat:b"}, 5);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == CandidateEntry{"x", 0.9, "s", "emb:a"});
  CHECK(out[1].model == "cat:b");

  CHECK(code_of([&] { svc.expand({}, {"emb:a"}, 5); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { svc.expand({"a"}, {"emb:a"}, 0); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { svc.expand({"a"}, {"emb:a"}, 1001); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { svc.expand({"a"}, {"nope"}, 5); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([&] { svc.expand({"a"}, {"emb:down"}, 5); }) ==
        ErrorCode::kResourceUnavailable);
}

TEST_CASE("full loop through the service") {
  TempDir dir;
  Rng rng(3);
  ModelRegistry reg;
  reg.add("emb:r", random_embedding(rng, 40));
  WorkbenchService svc(std::move(reg), SessionStore(dir.path()));

  Session s = svc.create_session("loop");
  s = svc.import_entities(s.id, "w1\nw2\nw3\n", DictionaryFormat::kSeeds);
  const auto batch = svc.expand_session(s.id, {"emb:r"}, 5);
  REQUIRE(batch.size() == 5);
  s = svc.submit_feedback(s.id, {{batch[0].surface, Verdict::kAccept},
                                 {batch[1].surface, Verdict::kAccept},
                                 {batch[2].surface, Verdict::kReject},
                                 {batch[3].surface, Verdict::kSkip},
                                 {batch[4].surface, Verdict::kSkip}});
  CHECK(s.dictionary.size() == 6);
  CHECK(s.pending.empty());
  CHECK(s.iteration == 1);
  CHECK(s.dictionary.find(batch[2].surface)->label == Label::kNegative);

  s = svc.update_entity(s.id, "w1", std::nullopt, false);
  const std::string csv_text = svc.export_session(s.id, DictionaryFormat::kCsv);
  CHECK(csv_text.find("w1,positive,,,false") != std::string::npos);

  const auto next = svc.expand_session(s.id, {"emb:r"}, 20);
  for (const auto &c : next) CHECK_FALSE(s.dictionary.contains(c.surface));

  const Session before = svc.get_session(s.id);
  CHECK(code_of([&] { svc.submit_feedback(s.id, {{"w1", Verdict::kAccept}}); }) ==
        ErrorCode::kUnknownCandidate);
  CHECK(svc.get_session(s.id) == before);
  CHECK(code_of([&] { svc.get_session("missing"); }) == ErrorCode::kNotFound);

  s = svc.add_entity(s.id, "fresh", Label::kPositive);
  const auto spans = svc.highlight_session(s.id, "a fresh w1 w2", {});
  REQUIRE(spans.size() == 2);  // w1 is inactive
  CHECK(spans[0].surface == "fresh");
}

TEST_CASE("concurrent sessions do not interfere") {
  TempDir dir;
  ModelRegistry reg;
  reg.add("cat:b", std::make_shared<StubBackend>(ModelKind::kCategory,
                                                 std::vector<CandidateEntry>{}));
  WorkbenchService svc(std::move(reg), SessionStore(dir.path()));
  std::vector<std::string> ids;
  for (int t = 0; t < 4; ++t) ids.push_back(svc.create_session("t").id);

  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (int i = 0; i < 25; ++i) {
        // Two writers per session race on the same ids.
        svc.add_entity(ids[t], "e" + std::to_string(i), Label::kPositive);
      }
    });
    threads.emplace_back([&, t] {
      for (int i = 0; i < 25; ++i) {
        svc.add_entity(ids[t], "f" + std::to_string(i), Label::kNegative);
      }
    });
  }
  for (auto &th : threads) th.join();
  for (const auto &id : ids) CHECK(svc.get_session(id).dictionary.size() == 50);
}

}  // TEST_SUITE
