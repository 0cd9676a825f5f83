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

#include "seedforge/session_store.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "seedforge/error.h"

namespace seedforge {

namespace fs = std::filesystem;

SessionStore::SessionStore(fs::path data_dir) : data_dir_(std::move(data_dir)) {
  std::error_code ec;
  fs::create_directories(data_dir_, ec);
  if (ec || !fs::is_directory(data_dir_)) {
    throw Error(ErrorCode::kStorageError,
                "cannot use data directory " + data_dir_.string());
  }
}

fs::path SessionStore::path_for(std::string_view id) const {
  return data_dir_ / (std::string(id) + ".json");
}

void SessionStore::save(const Session &session) const {
  if (!is_valid_session_id(session.id)) {
    throw Error(ErrorCode::kStorageError, "invalid session id");
  }
  const fs::path target = path_for(session.id);
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(ErrorCode::kStorageError, "cannot write " + temp.string());
    }
    out << session_to_json(session).dump(2) << '\n';
    out.flush();
    if (!out) {
      throw Error(ErrorCode::kStorageError, "short write to " + temp.string());
    }
  }
  std::error_code ec;
  fs::rename(temp, target, ec);
  if (ec) {
    throw Error(ErrorCode::kStorageError,
                "cannot replace " + target.string() + ": " + ec.message());
  }
}

Session SessionStore::load(std::string_view id) const {
  if (!is_valid_session_id(id)) {
    throw Error(ErrorCode::kNotFound, "no session '" + std::string(id) + "'");
  }
  const fs::path path = path_for(id);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kNotFound, "no session '" + std::string(id) + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return session_from_json(nlohmann::json::parse(buffer.str()));
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kStorageError,
                path.string() + ": " + std::string(e.what()));
  } catch (const Error &e) {
    throw Error(ErrorCode::kStorageError, path.string() + ": " + e.detail());
  }
}

bool SessionStore::exists(std::string_view id) const {
  std::error_code ec;
  return is_valid_session_id(id) && fs::is_regular_file(path_for(id), ec);
}

std::vector<std::string> SessionStore::list() const {
  std::vector<std::string> ids;
  std::error_code ec;
  for (const auto &item : fs::directory_iterator(data_dir_, ec)) {
    if (item.path().extension() != ".json") continue;
    std::string stem = item.path().stem().string();
    if (is_valid_session_id(stem)) ids.push_back(std::move(stem));
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace seedforge
