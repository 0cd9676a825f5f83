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

#ifndef SEEDFORGE_CSV_H_
#define SEEDFORGE_CSV_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace seedforge::csv {

// RFC 4180 field quoting: fields containing a comma, double quote, CR or LF
// are wrapped in quotes with inner quotes doubled.
std::string quote(std::string_view field);

// Joins quoted fields with commas and terminates the record with LF.
std::string format_record(const std::vector<std::string> &fields);

struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;  // 1-based line on which the record starts
};

// Parses RFC 4180 text; accepts LF or CRLF terminators and skips empty
// lines. Throws ParseError naming the offending line.
std::vector<Record> parse(std::string_view text);

}  // namespace seedforge::csv

#endif  // SEEDFORGE_CSV_H_
