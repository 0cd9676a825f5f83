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

#ifndef SEEDFORGE_SESSION_STORE_H_
#define SEEDFORGE_SESSION_STORE_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "seedforge/session.h"

namespace seedforge {

// One JSON document per session, <data_dir>/<id>.json. Writes go through a
// temporary file and a rename, so a reader never sees a torn document. Last
// write wins. Callers serialize access to any single session.
class SessionStore {
 public:
  // Creates the directory if needed; throws StorageError if it cannot.
  explicit SessionStore(std::filesystem::path data_dir);

  void save(const Session &session) const;
  // Throws NotFound for unknown or malformed ids, StorageError on I/O or
  // decoding failures.
  Session load(std::string_view id) const;
  bool exists(std::string_view id) const;
  std::vector<std::string> list() const;

  const std::filesystem::path &data_dir() const { return data_dir_; }

 private:
  std::filesystem::path path_for(std::string_view id) const;

  std::filesystem::path data_dir_;
};

}  // namespace seedforge

#endif  // SEEDFORGE_SESSION_STORE_H_
