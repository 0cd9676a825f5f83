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

// seedforge: entity dictionary workbench server and batch tools.
//
//   seedforge serve --embeddings vectors.txt.gz --kb isa.tsv --port 8080
//   seedforge expand --embeddings vectors.txt.gz --seeds seeds.txt --k 20
//   seedforge validate --embeddings vectors.txt.gz
//
// Exit codes: 0 success, 1 domain error, 2 usage or resource error.

#include <pthread.h>
#include <signal.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "seedforge/category.h"
#include "seedforge/csv.h"
#include "seedforge/dictionary.h"
#include "seedforge/embedding.h"
#include "seedforge/error.h"
#include "seedforge/http_server.h"
#include "seedforge/service.h"

namespace {

using namespace seedforge;
namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::string format_score(double score) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.6f", score);
  return buffer;
}

std::string read_file(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct ServeOptions {
  std::vector<std::string> embeddings;
  std::vector<std::string> kbs;
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string data_dir = "seedforge-data";
  double min_support = kDefaultMinSupport;
};

int run_serve(const ServeOptions &opts) {
  if (opts.embeddings.empty() && opts.kbs.empty()) {
    std::cerr << "serve: give at least one --embeddings or --kb resource\n";
    return kExitUsage;
  }

  // Block termination signals before any thread starts so that only the
  // waiter below receives them.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  ModelRegistry registry;
  try {
    for (const std::string &path : opts.embeddings) {
      auto loaded = load_embeddings(path);
      const std::string id = loaded.store.model_id();
      std::cerr << "loaded " << id << ": " << loaded.store.size()
                << " tokens, d=" << loaded.store.dimension() << ", skipped "
                << loaded.report.skipped() << "\n";
      registry.add(id, std::make_shared<EmbeddingBackend>(
                           std::make_shared<const EmbeddingStore>(
                               std::move(loaded.store))));
    }
    for (const std::string &path : opts.kbs) {
      auto loaded = load_kb(path);
      const std::string id = loaded.index.model_id();
      std::cerr << "loaded " << id << ": " << loaded.index.pair_count()
                << " is-a pairs\n";
      registry.add(id, std::make_shared<CategoryBackend>(
                           std::make_shared<const CategoryIndex>(
                               std::move(loaded.index)),
                           opts.min_support));
    }
  } catch (const Error &e) {
    std::cerr << "serve: " << e.what() << "\n";
    return kExitUsage;
  }

  std::unique_ptr<WorkbenchService> service;
  try {
    service = std::make_unique<WorkbenchService>(std::move(registry),
                                                 SessionStore(opts.data_dir));
  } catch (const Error &e) {
    std::cerr << "serve: " << e.what() << "\n";
    return kExitUsage;
  }

  HttpServer server(*service);
  int port = 0;
  try {
    port = server.bind(opts.host, opts.port);
  } catch (const Error &e) {
    std::cerr << "serve: " << e.what() << "\n";
    return kExitUsage;
  }
  std::cout << "listening on http://" << opts.host << ":" << port << std::endl;

  std::thread waiter([&server, signals] {
    int received = 0;
    sigwait(&signals, &received);
    server.stop();
  });
  server.listen();
  // listen() also returns if the server stopped for another reason; wake the
  // waiter so it can be joined.
  pthread_kill(waiter.native_handle(), SIGTERM);
  waiter.join();
  return kExitOk;
}

int run_expand(const std::string &embeddings, const std::string &seeds_path,
               int k, const std::string &format) {
  ExpansionRequest request;
  std::unique_ptr<LoadedEmbeddings> loaded;
  try {
    const Dictionary seeds =
        import_dictionary(read_file(seeds_path), DictionaryFormat::kCsv);
    request.positives = active_positive_set(seeds);
    request.exclusions = all_surfaces(seeds);
    request.k = static_cast<std::size_t>(k);
    if (request.positives.empty()) {
      std::cerr << "expand: " << seeds_path
                << " has no active positive seeds\n";
      return kExitUsage;
    }
    loaded = std::make_unique<LoadedEmbeddings>(load_embeddings(embeddings));
  } catch (const Error &e) {
    std::cerr << "expand: " << e.what() << "\n";
    return kExitUsage;
  }

  std::vector<CandidateEntry> candidates;
  try {
    candidates = expand(loaded->store, request);
  } catch (const Error &e) {
    std::cerr << "expand: " << e.what() << "\n";
    return kExitDomain;
  }

  if (format == "json") {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const CandidateEntry &c : candidates) {
      list.push_back(candidate_to_json(c));
    }
    nlohmann::ordered_json body;
    body["candidates"] = std::move(list);
    std::cout << body.dump(2) << "\n";
  } else {
    std::cout << "surface,score,origin,model\n";
    for (const CandidateEntry &c : candidates) {
      std::cout << csv::format_record(
          {c.surface, format_score(c.score), c.origin, c.model});
    }
  }
  return kExitOk;
}

int run_validate(const std::string &embeddings, const std::string &kb) {
  nlohmann::ordered_json report;
  if (!embeddings.empty()) {
    try {
      const auto loaded = load_embeddings(embeddings);
      const auto &r = loaded.report;
      report["kind"] = "embedding";
      report["model"] = loaded.store.model_id();
      report["vocabulary"] = loaded.store.size();
      report["dimension"] = loaded.store.dimension();
      report["lines"] = r.lines;
      report["skipped"] = r.skipped();
      report["skipped_malformed"] = r.skipped_malformed;
      report["skipped_zero_norm"] = r.skipped_zero_norm;
      report["skipped_duplicate"] = r.skipped_duplicate;
      std::cout << report.dump(2) << "\n";
      if (r.first_malformed_line) {
        std::cerr << "validate: " << embeddings << ": line "
                  << *r.first_malformed_line << ": "
                  << r.first_malformed_reason << "\n";
        return kExitDomain;
      }
      return kExitOk;
    } catch (const Error &e) {
      std::cerr << "validate: " << e.what() << "\n";
      return kExitDomain;
    }
  }

  try {
    const auto loaded = load_kb(kb);
    report["kind"] = "category";
    report["model"] = loaded.index.model_id();
    report["pairs"] = loaded.index.pair_count();
    report["lines"] = loaded.report.lines;
    report["duplicate_pairs"] = loaded.report.duplicate_pairs;
    report["entities"] = loaded.index.entity_to_categories().size();
    report["categories"] = loaded.index.category_to_entities().size();
    std::cout << report.dump(2) << "\n";
    return kExitOk;
  } catch (const Error &e) {
    std::cerr << "validate: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"seedforge: interactive entity dictionary workbench"};
  app.require_subcommand(1);

  ServeOptions serve_opts;
  auto *serve = app.add_subcommand("serve", "Run the HTTP service");
  serve->add_option("--embeddings", serve_opts.embeddings,
                    "GloVe text file (.gz ok); repeatable")
      ->envname("SEEDFORGE_EMBEDDINGS");
  serve->add_option("--kb", serve_opts.kbs,
                    "entity<TAB>category file; repeatable")
      ->envname("SEEDFORGE_KB");
  serve->add_option("--host", serve_opts.host, "Bind address")
      ->envname("SEEDFORGE_HOST")
      ->capture_default_str();
  serve->add_option("--port", serve_opts.port, "Port, 0 for any free port")
      ->envname("SEEDFORGE_PORT")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();
  serve->add_option("--data-dir", serve_opts.data_dir, "Session directory")
      ->envname("SEEDFORGE_DATA_DIR")
      ->capture_default_str();
  serve->add_option("--min-support", serve_opts.min_support,
                    "Category support threshold in (0, 1]")
      ->envname("SEEDFORGE_MIN_SUPPORT")
      ->check(CLI::Range(1e-9, 1.0))
      ->capture_default_str();

  std::string expand_embeddings;
  std::string expand_seeds;
  int expand_k = 20;
  std::string expand_format = "csv";
  auto *expand_cmd =
      app.add_subcommand("expand", "Rank candidates for a seed file");
  expand_cmd->add_option("--embeddings", expand_embeddings, "GloVe text file")
      ->required()
      ->envname("SEEDFORGE_EMBEDDINGS");
  expand_cmd->add_option("--seeds", expand_seeds,
                         "Seed list or exported dictionary")
      ->required();
  expand_cmd->add_option("--k", expand_k, "Number of candidates")
      ->envname("SEEDFORGE_K")
      ->check(CLI::Range(1, static_cast<int>(kMaxK)))
      ->capture_default_str();
  expand_cmd->add_option("--format", expand_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  std::string validate_embeddings;
  std::string validate_kb;
  auto *validate = app.add_subcommand("validate", "Check a resource file");
  auto *v_emb =
      validate->add_option("--embeddings", validate_embeddings, "GloVe file");
  auto *v_kb = validate->add_option("--kb", validate_kb, "is-a TSV file");
  v_emb->excludes(v_kb);
  validate->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  if (serve->parsed()) return run_serve(serve_opts);
  if (expand_cmd->parsed()) {
    return run_expand(expand_embeddings, expand_seeds, expand_k, expand_format);
  }
  return run_validate(validate_embeddings, validate_kb);
}
