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

#ifndef SEEDFORGE_SESSION_H_
#define SEEDFORGE_SESSION_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "seedforge/candidate.h"
#include "seedforge/dictionary.h"

namespace seedforge {

enum class Verdict { kAccept, kReject, kSkip };

std::string_view verdict_name(Verdict verdict);
// Accepts accept/reject/skip (also "+"/"-"); throws InvalidArgument.
Verdict parse_verdict(std::string_view text);

struct FeedbackDecision {
  CandidateEntry candidate;
  Verdict verdict = Verdict::kSkip;
};

// A named dictionary plus the candidate batch awaiting judgment.
//
// Invariant: no pending surface case-folds to a dictionary surface, and
// pending surfaces are unique under case folding.
struct Session {
  std::string id;
  std::string name;
  Dictionary dictionary;
  std::vector<CandidateEntry> pending;
  std::uint32_t iteration = 0;
  std::int64_t created_ms = 0;
  std::int64_t updated_ms = 0;

  bool operator==(const Session &) const = default;
};

// 32 lowercase hex characters from a random device.
std::string generate_session_id();
bool is_valid_session_id(std::string_view id);
std::int64_t now_ms();

Session new_session(std::string name);

// Judges pending candidates. Accepted candidates become positive active
// entries, rejected ones negative active entries (so they are never proposed
// again); skipped ones are dropped. Every judged candidate leaves pending.
// A nonempty batch increments the iteration counter once.
//
// Decisions are matched to pending by case-folded surface; the stored
// pending fields (origin, score, model) are what enter the dictionary.
// Throws UnknownCandidate for a non-pending surface and InvalidArgument when
// one batch judges the same candidate twice. On error nothing changes.
Session apply_feedback(const Session &session,
                       std::span<const FeedbackDecision> decisions);

// Replaces the pending batch, dropping candidates that collide with the
// dictionary or with an earlier candidate in the list.
Session replace_pending(const Session &session,
                        std::vector<CandidateEntry> candidates);

// Swaps in a new dictionary and prunes pending candidates it now contains.
Session with_dictionary(const Session &session, Dictionary dictionary);

// Storage document: {"id","name","iteration","created_ms","updated_ms",
// "entries":[...],"pending":[...]}.
nlohmann::ordered_json session_to_json(const Session &session);
Session session_from_json(const nlohmann::json &doc);

nlohmann::ordered_json candidate_to_json(const CandidateEntry &candidate);
CandidateEntry candidate_from_json(const nlohmann::json &doc);

}  // namespace seedforge

#endif  // SEEDFORGE_SESSION_H_
