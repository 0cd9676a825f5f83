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

#ifndef SEEDFORGE_TEXT_H_
#define SEEDFORGE_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace seedforge {

// One decoded unit of a UTF-8 string. Ill-formed sequences decode to a unit
// with valid == false whose value is a sentinel above U+10FFFF derived from its
// first byte; sentinels never fold, never count as alphanumeric.
struct Utf8Unit {
  char32_t value = 0;
  std::size_t offset = 0;
  std::size_t length = 0;
  bool valid = true;
};

std::vector<Utf8Unit> decode_utf8(std::string_view text);
void append_utf8(char32_t code_point, std::string *out);
bool is_valid_utf8(std::string_view text);

// Unicode simple case folding, code point by code point. Ill-formed bytes are
// copied through unchanged.
char32_t fold_code_point(char32_t c);
std::string case_fold(std::string_view text);

// Per-code-point lowercase mapping.
std::string to_lower(std::string_view text);

bool is_alnum(char32_t c);
bool is_space(char32_t c);

// Strips ASCII whitespace from both ends.
std::string trim(std::string_view text);

// Splits on runs of Unicode white space.
std::vector<std::string> split_whitespace(std::string_view text);

}  // namespace seedforge

#endif  // SEEDFORGE_TEXT_H_
