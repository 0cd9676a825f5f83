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

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "seedforge/csv.h"
#include "seedforge/dictionary.h"
#include "seedforge/error.h"
#include "seedforge/session.h"
#include "seedforge/session_store.h"
#include "seedforge/text.h"
#include "support/test_support.h"

using namespace seedforge;
using seedforge::testing::Rng;
using seedforge::testing::TempDir;

namespace {

ErrorCode code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kInvalidArgument;
}

Dictionary dict_of(std::initializer_list<std::string> surfaces) {
  Dictionary d;
  for (const auto &s : surfaces) d = add_entity(d, s, Label::kPositive);
  return d;
}

// Random entry exercising every optional field, including awkward CSV text.
EntityEntry random_entry(Rng &rng, std::set<std::string> &taken) {
  static const std::vector<std::string> pieces = {
      "bath", "Kitchen", "é", "Σ", "中文", "a,b", "say \"hi\"", "x\ny",
      "tab\there", "ß", "  ", "0.5", "#"};
  EntityEntry e;
  do {
    e.surface = rng.word(1, 6);
    if (rng.chance(0.4)) e.surface += rng.pick(pieces) + rng.word(1, 3);
  } while (!taken.insert(case_fold(trim(e.surface))).second ||
           trim(e.surface).empty());
  e.surface = trim(e.surface);
  e.label = rng.chance(0.3) ? Label::kNegative : Label::kPositive;
  if (rng.chance(0.6)) e.origin = rng.pick(pieces) + rng.word(1, 4);
  if (rng.chance(0.6)) e.score = rng.real(-1.0, 1.0);
  e.active = rng.chance(0.7);
  if (rng.chance(0.5)) e.model = "emb:" + rng.word(1, 5);
  e.iteration = static_cast<std::uint32_t>(rng.uniform(0, 50));
  return e;
}

Dictionary random_dictionary(Rng &rng, std::size_t max_size) {
  std::set<std::string> taken;
  std::vector<EntityEntry> entries;
  const std::size_t n = rng.uniform(0, max_size);
  for (std::size_t i = 0; i < n; ++i) entries.push_back(random_entry(rng, taken));
  return Dictionary::from_entries(std::move(entries));
}

void check_unique(const Dictionary &d) {
  std::set<std::string> folded;
  for (const auto &e : d.entries()) {
    CHECK(folded.insert(case_fold(e.surface)).second);
  }
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("utf8 decoding reports offsets and flags bad bytes") {
  const auto units = decode_utf8("aé\xff中");
  REQUIRE(units.size() == 4);
  CHECK(units[1].value == U'é');
  CHECK(units[1].offset == 1);
  CHECK(units[1].length == 2);
  CHECK_FALSE(units[2].valid);
  CHECK(units[3].offset == 4);
  CHECK(is_valid_utf8("Grüße"));
  CHECK_FALSE(is_valid_utf8("\xc3"));
}

TEST_CASE("case folding is simple and length preserving per code point") {
  CHECK(case_fold("Balcony") == "balcony");
  CHECK(case_fold("ΣΊΣΥΦΟΣ") == case_fold("σίσυφος"));
  CHECK(case_fold("Straße") == "straße");
  CHECK(decode_utf8(case_fold("İstanbul")).size() ==
        decode_utf8("İstanbul").size());
  CHECK(trim("  a b \t\n") == "a b");
  CHECK(split_whitespace(" New  York\tCity ") ==
        std::vector<std::string>{"New", "York", "City"});
}

TEST_CASE("csv parsing handles quotes, CRLF and embedded newlines") {
  const auto records = csv::parse("a,\"b,c\"\r\n\"x\ny\",\"q\"\"q\"\n\nlast,\n");
  REQUIRE(records.size() == 3);
  CHECK(records[0].fields == std::vector<std::string>{"a", "b,c"});
  CHECK(records[1].fields == std::vector<std::string>{"x\ny", "q\"q"});
  CHECK(records[2].line == 5);
  CHECK(records[2].fields == std::vector<std::string>{"last", ""});
  CHECK(csv::format_record({"a,b", "c\"d", "e"}) == "\"a,b\",\"c\"\"d\",e\n");

  try {
    csv::parse("ok\n\"unterminated\n");
    FAIL("no error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kParseError);
    CHECK(e.line() == 2);
  }
}

TEST_CASE("add_entity") {
  const Dictionary d = add_entity({}, "balcony", Label::kPositive);
  REQUIRE(d.size() == 1);
  CHECK(d.entries()[0].label == Label::kPositive);
  CHECK(d.entries()[0].active);
  CHECK_FALSE(d.entries()[0].origin);
  CHECK(code_of([&] { add_entity(d, "Balcony", Label::kPositive); }) ==
        ErrorCode::kDuplicateEntity);
  CHECK(code_of([&] { add_entity(d, "balcony", Label::kNegative); }) ==
        ErrorCode::kDuplicateEntity);
  CHECK(add_entity({}, "  bath  ", Label::kPositive).entries()[0].surface ==
        "bath");
  CHECK(code_of([&] { add_entity(d, " \t ", Label::kPositive); }) ==
        ErrorCode::kEmptySurface);
  CHECK(d.find("BALCONY") != nullptr);
}

TEST_CASE("rename_entity") {
  const Dictionary d = dict_of({"bath", "kitchen"});
  const Dictionary r = rename_entity(d, "bath", "bathtub");
  const EntityEntry *e = r.find("bathtub");
  REQUIRE(e != nullptr);
  CHECK(e->label == Label::kPositive);
  CHECK(e->active);
  CHECK_FALSE(r.contains("bath"));
  CHECK(code_of([&] { rename_entity(d, "bath", "kitchen"); }) ==
        ErrorCode::kDuplicateEntity);
  CHECK(code_of([&] { rename_entity(d, "pool", "x"); }) == ErrorCode::kNotFound);
  // Changing only the casing of the same entry is allowed.
  CHECK(rename_entity(d, "bath", "Bath").find("bath")->surface == "Bath");
}

TEST_CASE("delete_entity") {
  const Dictionary d = dict_of({"bath"});
  CHECK(delete_entity(d, "bath").empty());
  CHECK(add_entity(delete_entity(d, "bath"), "bath", Label::kPositive).size() == 1);
  CHECK(code_of([&] { delete_entity(d, "pool"); }) == ErrorCode::kNotFound);
}

TEST_CASE("set_active and active_positive_set") {
  const Dictionary d = dict_of({"bath", "kitchen"});
  const Dictionary off = set_active(d, "bath", false);
  CHECK(active_positive_set(off) == std::vector<std::string>{"kitchen"});
  CHECK(set_active(d, "bath", true) == d);
  CHECK(code_of([&] { set_active(d, "pool", false); }) == ErrorCode::kNotFound);

  Dictionary mixed = add_entity({}, "bath", Label::kPositive);
  mixed = add_entity(mixed, "mold", Label::kNegative);
  mixed = set_active(add_entity(mixed, "pool", Label::kPositive), "pool", false);
  CHECK(active_positive_set(mixed) == std::vector<std::string>{"bath"});
  CHECK(active_positive_set({}).empty());
  CHECK(active_positive_set(add_entity({}, "mold", Label::kNegative)).empty());
}

TEST_CASE("random operation sequences keep surfaces unique") {
  Rng rng(11);
  for (int trace = 0; trace < 200; ++trace) {
    Dictionary d;
    for (int step = 0; step < 40; ++step) {
      const std::string s = rng.word(1, 2, "abAB");
      try {
        switch (rng.uniform(0, 3)) {
          case 0:
            d = add_entity(d, s, rng.chance(0.5) ? Label::kPositive
                                                 : Label::kNegative);
            break;
          case 1: d = rename_entity(d, s, rng.word(1, 2, "abAB")); break;
          case 2: d = delete_entity(d, s); break;
          default: d = set_active(d, s, rng.chance(0.5)); break;
        }
      } catch (const Error &e) {
        CHECK((e.code() == ErrorCode::kDuplicateEntity ||
               e.code() == ErrorCode::kNotFound));
      }
      check_unique(d);
      for (const std::string &p : active_positive_set(d)) {
        const EntityEntry *e = d.find(p);
        REQUIRE(e != nullptr);
        CHECK(e->label == Label::kPositive);
        CHECK(e->active);
      }
    }
  }
}

TEST_CASE("export formats") {
  CHECK(export_dictionary({}, DictionaryFormat::kCsv) ==
        std::string(kCsvHeader) + "\n");
  EntityEntry e{"bath", Label::kPositive, "kitchen", 0.25, false, "emb:x", 3};
  const Dictionary d = Dictionary::from_entries({e});
  const std::string csv_text = export_dictionary(d, DictionaryFormat::kCsv);
  CHECK(csv_text == std::string(kCsvHeader) +
                        "\nbath,positive,kitchen,0.250000,false,emb:x,3\n");
  const auto doc =
      nlohmann::json::parse(export_dictionary(d, DictionaryFormat::kJson));
  CHECK(doc["entries"][0]["active"] == false);
  CHECK(doc["entries"][0]["surface"] == "bath");

  const Dictionary bare = dict_of({"pool"});
  const auto bare_doc =
      nlohmann::json::parse(export_dictionary(bare, DictionaryFormat::kJson));
  CHECK(bare_doc["entries"][0]["origin"].is_null());
  CHECK(bare_doc["entries"][0]["score"].is_null());
}

TEST_CASE("import seeds and duplicates") {
  const Dictionary d =
      import_dictionary("bath\nkitchen\n\nbalcony\n", DictionaryFormat::kSeeds);
  REQUIRE(d.size() == 3);
  for (const auto &e : d.entries()) {
    CHECK(e.label == Label::kPositive);
    CHECK(e.active);
    CHECK_FALSE(e.origin);
    CHECK_FALSE(e.score);
  }
  CHECK(code_of([] {
          import_dictionary("bath\nBath\n", DictionaryFormat::kSeeds);
        }) == ErrorCode::kDuplicateEntity);
  // Seed files are also accepted in csv mode.
  CHECK(import_dictionary("bath\nkitchen\n", DictionaryFormat::kCsv).size() == 2);
  try {
    import_dictionary(std::string(kCsvHeader) + "\nbath,maybe,,,true,,0\n",
                      DictionaryFormat::kCsv);
    FAIL("no error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kParseError);
    CHECK(e.line() == 2);
  }
}

TEST_CASE("csv and json round-trips are the identity") {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const Dictionary d = random_dictionary(rng, 30);
    for (auto fmt : {DictionaryFormat::kCsv, DictionaryFormat::kJson}) {
      const Dictionary back = import_dictionary(export_dictionary(d, fmt), fmt);
      CHECK(back == d);
    }
  }
}

TEST_CASE("apply_feedback") {
  Session s = new_session("demo");
  s.dictionary = dict_of({"bath"});
  const CandidateEntry c1{"kitchen", 0.8, "bath", "emb:x"};
  const CandidateEntry c2{"mold", 0.4, "bath", "emb:x"};
  const CandidateEntry c3{"pool", 0.3, "bath", "emb:x"};
  s = replace_pending(s, {c1, c2, c3});

  const std::vector<FeedbackDecision> ds = {{c1, Verdict::kAccept},
                                            {c2, Verdict::kReject},
                                            {c3, Verdict::kSkip}};
  const Session after = apply_feedback(s, ds);
  CHECK(after.dictionary.size() == 3);
  CHECK(after.pending.empty());
  CHECK(after.iteration == s.iteration + 1);
  const EntityEntry *k = after.dictionary.find("kitchen");
  REQUIRE(k != nullptr);
  CHECK(k->origin == "bath");
  CHECK(k->score == doctest::Approx(0.8));
  CHECK(k->model == "emb:x");
  CHECK(k->iteration == s.iteration);
  CHECK(after.dictionary.find("mold")->label == Label::kNegative);
  CHECK_FALSE(after.dictionary.contains("pool"));

  CHECK(apply_feedback(s, {}) == s);

  const std::vector<FeedbackDecision> bad = {
      {c1, Verdict::kAccept}, {{"ghost", 0.1, "bath", "emb:x"}, Verdict::kAccept}};
  const Session before = s;
  CHECK(code_of([&] { apply_feedback(s, bad); }) == ErrorCode::kUnknownCandidate);
  CHECK(s == before);
}

TEST_CASE("session store round-trip and overwrite") {
  TempDir dir;
  SessionStore store(dir.path());
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    Session s = new_session("s" + std::to_string(i));
    s.dictionary = random_dictionary(rng, 20);
    s.pending = {{"x" + rng.word(1, 5), 0.5, "o", "m"}};
    s.iteration = static_cast<std::uint32_t>(rng.uniform(0, 9));
    store.save(s);
    CHECK(store.load(s.id) == s);
  }
  Session s = new_session("first");
  store.save(s);
  s.name = "second";
  store.save(s);
  CHECK(store.load(s.id).name == "second");
  CHECK(code_of([&] { store.load("nope"); }) == ErrorCode::kNotFound);
  CHECK(code_of([&] { store.load("../etc"); }) == ErrorCode::kNotFound);
  CHECK(store.list().size() == 21);
}

}  // TEST_SUITE
