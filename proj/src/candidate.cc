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

#include "seedforge/candidate.h"

#include "seedforge/error.h"

namespace seedforge {

void validate_request(const ExpansionRequest &request) {
  if (request.positives.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "positives must be nonempty");
  }
  if (request.k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  }
}

bool ranks_before(const CandidateEntry &a, const CandidateEntry &b) {
  if (a.score != b.score) return a.score > b.score;
  return a.surface < b.surface;
}

}  // namespace seedforge
