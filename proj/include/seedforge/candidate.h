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

#ifndef SEEDFORGE_CANDIDATE_H_
#define SEEDFORGE_CANDIDATE_H_

#include <cstddef>
#include <string>
#include <vector>

namespace seedforge {

// One expansion result awaiting feedback. For embedding models origin is the
// seed with the highest cosine; for category models it is the category name.
struct CandidateEntry {
  std::string surface;
  double score = 0.0;
  std::string origin;
  std::string model;

  bool operator==(const CandidateEntry &) const = default;
};

// Input to every expansion backend. Candidates that case-fold to any member
// of positives or exclusions are never returned.
struct ExpansionRequest {
  std::vector<std::string> positives;
  std::vector<std::string> exclusions;
  std::size_t k = 20;
};

// Throws InvalidArgument unless positives is nonempty and k >= 1.
void validate_request(const ExpansionRequest &request);

// Ranking used by every backend and the merger: score descending, then
// surface ascending (byte order).
bool ranks_before(const CandidateEntry &a, const CandidateEntry &b);

}  // namespace seedforge

#endif  // SEEDFORGE_CANDIDATE_H_
