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

#include "seedforge/session.h"

#include <chrono>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "seedforge/error.h"
#include "seedforge/text.h"

namespace seedforge {

std::string_view verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::kAccept: return "accept";
    case Verdict::kReject: return "reject";
    case Verdict::kSkip: return "skip";
  }
  return "skip";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "accept" || text == "+") return Verdict::kAccept;
  if (text == "reject" || text == "-") return Verdict::kReject;
  if (text == "skip") return Verdict::kSkip;
  throw Error(ErrorCode::kInvalidArgument,
              "verdict must be accept, reject or skip, got '" +
                  std::string(text) + "'");
}

std::string generate_session_id() {
  static constexpr char kHex[] = "0123456789abcdef";
  std::random_device device;
  std::string id;
  id.reserve(32);
  for (int i = 0; i < 4; ++i) {
    std::uint32_t bits = device();
    for (int j = 0; j < 8; ++j) {
      id += kHex[bits & 0xF];
      bits >>= 4;
    }
  }
  return id;
}

bool is_valid_session_id(std::string_view id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id) {
    const bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
                    (c >= 'A' && c <= 'Z') || c == '-' || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::int64_t now_ms() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::system_clock::now().time_since_epoch())
      .count();
}

Session new_session(std::string name) {
  Session session;
  session.id = generate_session_id();
  session.name = std::move(name);
  session.created_ms = now_ms();
  session.updated_ms = session.created_ms;
  return session;
}

Session apply_feedback(const Session &session,
                       std::span<const FeedbackDecision> decisions) {
  if (decisions.empty()) return session;

  std::unordered_map<std::string, std::size_t> pending_index;
  for (std::size_t i = 0; i < session.pending.size(); ++i) {
    pending_index.emplace(case_fold(session.pending[i].surface), i);
  }

  // Validate the whole batch before touching anything.
  std::vector<std::size_t> targets;
  targets.reserve(decisions.size());
  std::unordered_set<std::size_t> judged;
  for (const FeedbackDecision &decision : decisions) {
    auto it = pending_index.find(case_fold(decision.candidate.surface));
    if (it == pending_index.end()) {
      throw Error(ErrorCode::kUnknownCandidate,
                  "'" + decision.candidate.surface + "' is not pending");
    }
    if (!judged.insert(it->second).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "'" + decision.candidate.surface + "' judged twice");
    }
    targets.push_back(it->second);
  }

  Session out = session;
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    const Verdict verdict = decisions[i].verdict;
    if (verdict == Verdict::kSkip) continue;
    const CandidateEntry &candidate = session.pending[targets[i]];
    EntityEntry entry;
    entry.surface = candidate.surface;
    entry.label =
        verdict == Verdict::kAccept ? Label::kPositive : Label::kNegative;
    entry.origin = candidate.origin;
    entry.score = candidate.score;
    entry.model = candidate.model;
    entry.active = true;
    entry.iteration = session.iteration;
    out.dictionary = append_entry(out.dictionary, std::move(entry));
  }

  out.pending.clear();
  for (std::size_t i = 0; i < session.pending.size(); ++i) {
    if (judged.count(i) == 0) out.pending.push_back(session.pending[i]);
  }
  out.iteration = session.iteration + 1;
  return out;
}

Session replace_pending(const Session &session,
                        std::vector<CandidateEntry> candidates) {
  Session out = session;
  out.pending.clear();
  std::unordered_set<std::string> seen;
  for (CandidateEntry &candidate : candidates) {
    std::string key = case_fold(candidate.surface);
    if (session.dictionary.contains(candidate.surface)) continue;
    if (!seen.insert(std::move(key)).second) continue;
    out.pending.push_back(std::move(candidate));
  }
  return out;
}

Session with_dictionary(const Session &session, Dictionary dictionary) {
  Session out = session;
  out.dictionary = std::move(dictionary);
  std::vector<CandidateEntry> kept;
  for (const CandidateEntry &candidate : session.pending) {
    if (!out.dictionary.contains(candidate.surface)) kept.push_back(candidate);
  }
  out.pending = std::move(kept);
  return out;
}

nlohmann::ordered_json candidate_to_json(const CandidateEntry &candidate) {
  nlohmann::ordered_json out;
  out["surface"] = candidate.surface;
  out["score"] = candidate.score;
  out["origin"] = candidate.origin;
  out["model"] = candidate.model;
  return out;
}

CandidateEntry candidate_from_json(const nlohmann::json &doc) {
  if (!doc.is_object() || !doc.contains("surface") ||
      !doc["surface"].is_string() || !doc.contains("score") ||
      !doc["score"].is_number()) {
    throw Error(ErrorCode::kParseError,
                "candidate needs string surface and numeric score");
  }
  CandidateEntry candidate;
  candidate.surface = doc["surface"].get<std::string>();
  candidate.score = doc["score"].get<double>();
  if (doc.contains("origin") && doc["origin"].is_string()) {
    candidate.origin = doc["origin"].get<std::string>();
  }
  if (doc.contains("model") && doc["model"].is_string()) {
    candidate.model = doc["model"].get<std::string>();
  }
  return candidate;
}

nlohmann::ordered_json session_to_json(const Session &session) {
  nlohmann::ordered_json out;
  out["id"] = session.id;
  out["name"] = session.name;
  out["iteration"] = session.iteration;
  out["created_ms"] = session.created_ms;
  out["updated_ms"] = session.updated_ms;
  out["entries"] = dictionary_to_json(session.dictionary)["entries"];
  nlohmann::ordered_json pending = nlohmann::ordered_json::array();
  for (const CandidateEntry &candidate : session.pending) {
    pending.push_back(candidate_to_json(candidate));
  }
  out["pending"] = std::move(pending);
  return out;
}

Session session_from_json(const nlohmann::json &doc) {
  try {
    Session session;
    session.id = doc.at("id").get<std::string>();
    session.name = doc.at("name").get<std::string>();
    session.iteration = doc.at("iteration").get<std::uint32_t>();
    session.created_ms = doc.at("created_ms").get<std::int64_t>();
    session.updated_ms = doc.at("updated_ms").get<std::int64_t>();
    nlohmann::json dict_doc;
    dict_doc["entries"] = doc.at("entries");
    session.dictionary = dictionary_from_json(dict_doc);
    for (const auto &item : doc.at("pending")) {
      session.pending.push_back(candidate_from_json(item));
    }
    return session;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParseError,
                std::string("malformed session document: ") + e.what());
  }
}

}  // namespace seedforge
