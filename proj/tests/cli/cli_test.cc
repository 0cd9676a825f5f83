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

// Runs the seedforge binary as a subprocess and checks exit codes and output.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fcntl.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "oracles/knn_oracle.h"
#include "seedforge/embedding.h"
#include "support/test_support.h"

using nlohmann::json;
using seedforge::testing::Rng;
using seedforge::testing::TempDir;
using seedforge::testing::write_file;
using seedforge::testing::write_gzip;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

// Runs the binary to completion with the given arguments and extra
// environment entries, capturing both streams through temp files.
RunResult run(const std::vector<std::string> &args,
              const std::vector<std::string> &env = {}) {
  TempDir io;
  const std::string out_path = io / "out";
  const std::string err_path = io / "err";
  const pid_t pid = fork();
  if (pid == 0) {
    if (!freopen(out_path.c_str(), "w", stdout)) _exit(126);
    if (!freopen(err_path.c_str(), "w", stderr)) _exit(126);
    for (const auto &kv : env) putenv(const_cast<char *>(kv.c_str()));
    std::vector<char *> argv;
    std::string binary = SEEDFORGE_BINARY;
    argv.push_back(binary.data());
    for (const auto &a : args) argv.push_back(const_cast<char *>(a.c_str()));
    argv.push_back(nullptr);
    execv(binary.c_str(), argv.data());
    _exit(127);
  }
  int status = 0;
  waitpid(pid, &status, 0);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1,
          seedforge::testing::read_file(out_path),
          seedforge::testing::read_file(err_path)};
}

// A running `serve` process; reads the announced port from stdout.
class Server {
 public:
  explicit Server(const std::vector<std::string> &args) {
    int fds[2];
    REQUIRE(pipe(fds) == 0);
    pid_ = fork();
    if (pid_ == 0) {
      dup2(fds[1], STDOUT_FILENO);
      close(fds[0]);
      std::vector<char *> argv;
      std::string binary = SEEDFORGE_BINARY;
      argv.push_back(binary.data());
      for (const auto &a : args) argv.push_back(const_cast<char *>(a.c_str()));
      argv.push_back(nullptr);
      execv(binary.c_str(), argv.data());
      _exit(127);
    }
    close(fds[1]);
    FILE *stream = fdopen(fds[0], "r");
    char line[256] = {0};
    if (fgets(line, sizeof(line), stream) != nullptr) {
      const std::string text = line;
      const auto colon = text.rfind(':');
      if (colon != std::string::npos) port_ = std::stoi(text.substr(colon + 1));
    }
    fclose(stream);
  }
  ~Server() {
    kill(pid_, SIGTERM);
    int status = 0;
    waitpid(pid_, &status, 0);
    exit_code_ = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  int port() const { return port_; }

 private:
  pid_t pid_ = -1;
  int port_ = 0;
  int exit_code_ = -1;
};

const std::string kFixtureDir = SEEDFORGE_FIXTURE_DIR;

std::string toy_embeddings(Rng &rng, std::size_t n, std::size_t dim) {
  std::ostringstream text;
  for (std::size_t i = 0; i < n; ++i) {
    text << "tok" << i;
    for (std::size_t j = 0; j < dim; ++j) text << ' ' << rng.real(-1, 1);
    text << '\n';
  }
  return text.str();
}

}  // namespace

TEST_CASE("serve with one embedding file exposes one model") {
  TempDir dir;
  Rng rng(1);
  write_file(dir / "rooms.txt", toy_embeddings(rng, 20, 4));
  Server server({"serve", "--embeddings", dir / "rooms.txt", "--port", "0",
                 "--data-dir", dir / "data"});
  REQUIRE(server.port() > 0);
  httplib::Client client("127.0.0.1", server.port());
  auto res = client.Get("/models");
  REQUIRE(res);
  CHECK(json::parse(res->body) == json::parse(R"([{"id":"emb:rooms","kind":"embedding"}])"));
}

TEST_CASE("serve with two embedding files exposes two ids") {
  TempDir dir;
  Rng rng(2);
  write_file(dir / "a.txt", toy_embeddings(rng, 10, 3));
  write_gzip(dir / "b.txt.gz", toy_embeddings(rng, 10, 3));
  Server server({"serve", "--embeddings", dir / "a.txt", "--embeddings",
                 dir / "b.txt.gz", "--kb", kFixtureDir + "/desk_kb.tsv", "--port",
                 "0", "--data-dir", dir / "data"});
  REQUIRE(server.port() > 0);
  httplib::Client client("127.0.0.1", server.port());
  auto res = client.Get("/models");
  REQUIRE(res);
  std::set<std::string> ids;
  for (const auto &m : json::parse(res->body)) ids.insert(m["id"]);
  CHECK(ids == std::set<std::string>{"emb:a", "emb:b", "cat:desk_kb"});
}

TEST_CASE("serve without resources or with bad input is a usage error") {
  TempDir dir;
  CHECK(run({"serve", "--port", "0", "--data-dir", dir / "data"}).exit_code == 2);
  CHECK(run({"serve", "--embeddings", dir / "missing.txt", "--port", "0"}).exit_code == 2);
  CHECK(run({"serve", "--embeddings", dir / "x", "--port", "70000"}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
}

TEST_CASE("expand matches the oracle and honors exit codes") {
  TempDir dir;
  Rng rng(3);
  write_file(dir / "toy.txt", toy_embeddings(rng, 40, 5));
  write_file(dir / "seeds.txt", "tok3\ntok11\n");
  const RunResult r = run({"expand", "--embeddings", dir / "toy.txt", "--seeds",
                           dir / "seeds.txt", "--k", "5"});
  REQUIRE(r.exit_code == 0);

  const auto loaded = seedforge::load_embeddings(dir / "toy.txt");
  const auto expected = *seedforge::oracle::brute_force_expand(
      loaded.store, {{"tok3", "tok11"}, {}, 5});
  std::string want = "surface,score,origin,model\n";
  for (const auto &c : expected) {
    char score[32];
    std::snprintf(score, sizeof(score), "%.6f", c.score);
    want += c.surface + "," + score + "," + c.origin + "," + c.model + "\n";
  }
  CHECK(r.out == want);

  const RunResult j = run({"expand", "--seeds", dir / "seeds.txt", "--k", "2",
                           "--format", "json"},
                          {"SEEDFORGE_EMBEDDINGS=" + (dir / "toy.txt").string()});
  REQUIRE(j.exit_code == 0);
  CHECK(json::parse(j.out)["candidates"].size() == 2);

  CHECK(run({"expand", "--embeddings", dir / "toy.txt", "--seeds", dir / "seeds.txt",
             "--k", "0"}).exit_code == 2);
  write_file(dir / "oov.txt", "nothing\nhere\n");
  const RunResult oov = run({"expand", "--embeddings", dir / "toy.txt", "--seeds",
                             dir / "oov.txt"});
  CHECK(oov.exit_code == 1);
  CHECK(oov.out.empty());
}

TEST_CASE("validate reports on the bundled fixtures") {
  // Independent count: distinct tokens on non-empty lines with 51 fields.
  gzFile gz = gzopen((kFixtureDir + "/desk50.txt.gz").c_str(), "rb");
  REQUIRE(gz != nullptr);
  std::set<std::string> tokens;
  std::string line;
  char buffer[4096];
  while (gzgets(gz, buffer, sizeof(buffer)) != nullptr) {
    line += buffer;
    if (line.back() != '\n') continue;
    std::istringstream fields(line);
    std::string token, value;
    fields >> token;
    int count = 0;
    while (fields >> value) ++count;
    if (count == 50) tokens.insert(token);
    line.clear();
  }
  gzclose(gz);

  const RunResult r = run({"validate", "--embeddings", kFixtureDir + "/desk50.txt.gz"});
  REQUIRE(r.exit_code == 0);
  const json report = json::parse(r.out);
  CHECK(report["dimension"] == 50);
  CHECK(report["vocabulary"] == tokens.size());
  CHECK(report["skipped"] == 0);

  std::set<std::pair<std::string, std::string>> pairs;
  std::istringstream kb(seedforge::testing::read_file(kFixtureDir + "/desk_kb.tsv"));
  while (std::getline(kb, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    pairs.emplace(line.substr(0, tab), line.substr(tab + 1));
  }
  const RunResult k = run({"validate", "--kb", kFixtureDir + "/desk_kb.tsv"});
  REQUIRE(k.exit_code == 0);
  CHECK(json::parse(k.out)["pairs"] == pairs.size());
}

TEST_CASE("validate flags malformed input with its line number") {
  TempDir dir;
  write_file(dir / "bad.txt", "a 1 2 3\nb 1 2 3\nc 1 2\nd 1 2 3\n");
  const RunResult r = run({"validate", "--embeddings", dir / "bad.txt"});
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("line 3") != std::string::npos);

  // Cut a gzip stream mid-way.
  Rng rng(4);
  write_gzip(dir / "full.txt.gz", toy_embeddings(rng, 2000, 10));
  const std::string bytes = seedforge::testing::read_file(dir / "full.txt.gz");
  write_file(dir / "cut.txt.gz", bytes.substr(0, bytes.size() / 2));
  const RunResult cut = run({"validate", "--embeddings", dir / "cut.txt.gz"});
  CHECK(cut.exit_code == 1);
  CHECK(cut.err.find("line ") != std::string::npos);

  write_file(dir / "bad.tsv", "python\tlang\njust-one-column\n");
  const RunResult kb = run({"validate", "--kb", dir / "bad.tsv"});
  CHECK(kb.exit_code == 1);
  CHECK(kb.err.find("line 2") != std::string::npos);

  CHECK(run({"validate"}).exit_code == 2);
  CHECK(run({"validate", "--kb", "a", "--embeddings", "b"}).exit_code == 2);
}
