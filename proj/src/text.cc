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

#include "seedforge/text.h"

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace seedforge {
namespace {

constexpr char32_t kIllFormedBase = 0x110000;

bool ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

template <typename MapFn>
std::string map_code_points(std::string_view text, MapFn map) {
  std::string out;
  out.reserve(text.size());
  for (const Utf8Unit &unit : decode_utf8(text)) {
    if (unit.valid) {
      append_utf8(map(unit.value), &out);
    } else {
      out.append(text.substr(unit.offset, unit.length));
    }
  }
  return out;
}

}  // namespace

std::vector<Utf8Unit> decode_utf8(std::string_view text) {
  std::vector<Utf8Unit> units;
  units.reserve(text.size());
  const auto *bytes = reinterpret_cast<const uint8_t *>(text.data());
  const int32_t length = static_cast<int32_t>(text.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(bytes, i, length, c);
    Utf8Unit unit;
    unit.offset = static_cast<std::size_t>(start);
    unit.length = static_cast<std::size_t>(i - start);
    if (c < 0) {
      unit.valid = false;
      unit.value = kIllFormedBase + bytes[start];
    } else {
      unit.value = static_cast<char32_t>(c);
    }
    units.push_back(unit);
  }
  return units;
}

void append_utf8(char32_t code_point, std::string *out) {
  uint8_t buffer[U8_MAX_LENGTH];
  int32_t length = 0;
  UBool error = false;
  U8_APPEND(buffer, length, U8_MAX_LENGTH, static_cast<UChar32>(code_point),
            error);
  if (!error) out->append(reinterpret_cast<const char *>(buffer), length);
}

bool is_valid_utf8(std::string_view text) {
  for (const Utf8Unit &unit : decode_utf8(text)) {
    if (!unit.valid) return false;
  }
  return true;
}

char32_t fold_code_point(char32_t c) {
  if (c >= kIllFormedBase) return c;
  return static_cast<char32_t>(
      u_foldCase(static_cast<UChar32>(c), U_FOLD_CASE_DEFAULT));
}

std::string case_fold(std::string_view text) {
  return map_code_points(text, fold_code_point);
}

std::string to_lower(std::string_view text) {
  return map_code_points(text, [](char32_t c) {
    return static_cast<char32_t>(u_tolower(static_cast<UChar32>(c)));
  });
}

bool is_alnum(char32_t c) {
  if (c >= kIllFormedBase) return false;
  return u_isalnum(static_cast<UChar32>(c));
}

bool is_space(char32_t c) {
  if (c >= kIllFormedBase) return false;
  return u_isUWhiteSpace(static_cast<UChar32>(c));
}

std::string trim(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && ascii_space(text[begin])) ++begin;
  while (end > begin && ascii_space(text[end - 1])) --end;
  return std::string(text.substr(begin, end - begin));
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (const Utf8Unit &unit : decode_utf8(text)) {
    if (unit.valid && is_space(unit.value)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.append(text.substr(unit.offset, unit.length));
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

}  // namespace seedforge
