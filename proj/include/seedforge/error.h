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

#ifndef SEEDFORGE_ERROR_H_
#define SEEDFORGE_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seedforge {

enum class ErrorCode {
  kDuplicateEntity,
  kEmptySurface,
  kNotFound,
  kUnknownCandidate,
  kParseError,
  kStorageError,
  kIoError,
  kEmptyVocabulary,
  kNoResolvableSeed,
  kEmptyIndex,
  kInvalidSpan,
  kInvalidArgument,
  kResourceUnavailable,
};

// Stable wire name of an error code, e.g. "DuplicateEntity".
std::string_view error_code_name(ErrorCode code);

// Every failure raised by the library. Parse failures additionally carry the
// 1-based line and/or byte offset where parsing stopped.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &detail);

  static Error parse_at_line(std::size_t line, const std::string &detail);
  static Error parse_at_offset(std::size_t offset, const std::string &detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string &detail() const noexcept { return detail_; }
  std::optional<std::size_t> line() const noexcept { return line_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> offset_;
};

}  // namespace seedforge

#endif  // SEEDFORGE_ERROR_H_
