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

#include "seedforge/error.h"

namespace seedforge {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateEntity: return "DuplicateEntity";
    case ErrorCode::kEmptySurface: return "EmptySurface";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kUnknownCandidate: return "UnknownCandidate";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kStorageError: return "StorageError";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kEmptyVocabulary: return "EmptyVocabulary";
    case ErrorCode::kNoResolvableSeed: return "NoResolvableSeed";
    case ErrorCode::kEmptyIndex: return "EmptyIndex";
    case ErrorCode::kInvalidSpan: return "InvalidSpan";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kResourceUnavailable: return "ResourceUnavailable";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &detail)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

Error Error::parse_at_line(std::size_t line, const std::string &detail) {
  Error error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + detail);
  error.line_ = line;
  return error;
}

Error Error::parse_at_offset(std::size_t offset, const std::string &detail) {
  Error error(ErrorCode::kParseError,
              "byte " + std::to_string(offset) + ": " + detail);
  error.offset_ = offset;
  return error;
}

}  // namespace seedforge
