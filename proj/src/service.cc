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

#include "seedforge/service.h"

#include <algorithm>
#include <unordered_map>

#include "seedforge/error.h"
#include "seedforge/text.h"

namespace seedforge {
namespace {

Error invalid(const std::string &field, const std::string &what) {
  return Error(ErrorCode::kInvalidArgument, field + ": " + what);
}

void check_k(long long k) {
  if (k < 1 || k > static_cast<long long>(kMaxK)) {
    throw invalid("k", "must be between 1 and " + std::to_string(kMaxK));
  }
}

// Runs every selected backend. A backend that cannot resolve any seed
// contributes nothing; if that happens to all of them the error propagates.
std::vector<CandidateEntry> run_models(const ModelRegistry &registry,
                                       const ExpansionRequest &request,
                                       const std::vector<std::string> &ids) {
  if (ids.empty()) throw invalid("models", "select at least one model");
  std::vector<std::string> unique_ids;
  for (const std::string &id : ids) {
    if (registry.find(id) == nullptr) {
      throw invalid("models", "unknown model '" + id + "'");
    }
    if (std::find(unique_ids.begin(), unique_ids.end(), id) ==
        unique_ids.end()) {
      unique_ids.push_back(id);
    }
  }

  std::vector<ModelResult> results;
  std::optional<Error> unresolved;
  for (const std::string &id : unique_ids) {
    const ExpansionBackend *backend = registry.find(id);
    try {
      results.push_back({id, backend->kind(), backend->expand(request)});
    } catch (const Error &e) {
      if (e.code() != ErrorCode::kNoResolvableSeed) throw;
      unresolved = e;
    }
  }
  if (results.empty() && unresolved) throw *unresolved;
  return merge_candidates(results, request.k);
}

}  // namespace

std::string_view model_kind_name(ModelKind kind) {
  return kind == ModelKind::kEmbedding ? "embedding" : "category";
}

std::vector<CandidateEntry> EmbeddingBackend::expand(
    const ExpansionRequest &request) const {
  return seedforge::expand(*store_, request);
}

std::vector<CandidateEntry> CategoryBackend::expand(
    const ExpansionRequest &request) const {
  return expand_by_category(*index_, request, min_support_);
}

std::vector<CandidateEntry> UnavailableBackend::expand(
    const ExpansionRequest &) const {
  throw Error(ErrorCode::kResourceUnavailable, reason_);
}

void ModelRegistry::add(std::string id,
                        std::shared_ptr<const ExpansionBackend> backend) {
  if (id.empty() || backend == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "model id and backend required");
  }
  if (models_.count(id) > 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "model id '" + id + "' registered twice");
  }
  models_.emplace(std::move(id), std::move(backend));
}

const ExpansionBackend *ModelRegistry::find(std::string_view id) const {
  auto it = models_.find(id);
  return it == models_.end() ? nullptr : it->second.get();
}

std::vector<ModelDescriptor> ModelRegistry::describe() const {
  std::vector<ModelDescriptor> out;
  for (const auto &[id, backend] : models_) {
    out.push_back({id, backend->kind()});
  }
  return out;
}

std::vector<CandidateEntry> merge_candidates(std::span<const ModelResult> results,
                                             std::size_t k) {
  struct Winner {
    CandidateEntry candidate;
    ModelKind kind;
    std::string model_id;
  };
  const auto beats = [](const Winner &a, const Winner &b) {
    if (a.candidate.score != b.candidate.score) {
      return a.candidate.score > b.candidate.score;
    }
    if (a.kind != b.kind) return a.kind == ModelKind::kEmbedding;
    return a.model_id < b.model_id;
  };

  std::unordered_map<std::string, std::size_t> by_surface;
  std::vector<Winner> winners;
  for (const ModelResult &result : results) {
    for (const CandidateEntry &candidate : result.candidates) {
      Winner contender{candidate, result.kind, result.model_id};
      contender.candidate.model = result.model_id;
      std::string key = case_fold(candidate.surface);
      auto it = by_surface.find(key);
      if (it == by_surface.end()) {
        by_surface.emplace(std::move(key), winners.size());
        winners.push_back(std::move(contender));
      } else if (beats(contender, winners[it->second])) {
        winners[it->second] = std::move(contender);
      }
    }
  }

  std::vector<CandidateEntry> merged;
  merged.reserve(winners.size());
  for (Winner &winner : winners) merged.push_back(std::move(winner.candidate));
  std::sort(merged.begin(), merged.end(), ranks_before);
  if (merged.size() > k) merged.resize(k);
  return merged;
}

WorkbenchService::WorkbenchService(ModelRegistry registry, SessionStore store)
    : registry_(std::move(registry)), store_(std::move(store)) {
  if (registry_.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "at least one expansion model must be registered");
  }
}

std::vector<CandidateEntry> WorkbenchService::expand(
    const std::vector<std::string> &entities,
    const std::vector<std::string> &model_ids, long long k) const {
  if (entities.empty()) throw invalid("entities", "must be nonempty");
  check_k(k);
  ExpansionRequest request;
  request.positives = entities;
  request.exclusions = entities;
  request.k = static_cast<std::size_t>(k);
  return run_models(registry_, request, model_ids);
}

std::shared_ptr<std::mutex> WorkbenchService::session_mutex(
    std::string_view id) const {
  std::lock_guard<std::mutex> guard(locks_mutex_);
  auto it = locks_.find(id);
  if (it == locks_.end()) {
    it = locks_.emplace(std::string(id), std::make_shared<std::mutex>()).first;
  }
  return it->second;
}

template <typename Fn>
Session WorkbenchService::mutate(std::string_view id, Fn &&fn) {
  const auto mutex = session_mutex(id);
  std::lock_guard<std::mutex> guard(*mutex);
  Session next = fn(store_.load(id));
  next.updated_ms = std::max(now_ms(), next.created_ms);
  store_.save(next);
  return next;
}

Session WorkbenchService::create_session(std::string name,
                                         std::optional<std::string_view> seeds) {
  Session session = new_session(std::move(name));
  if (seeds) {
    session.dictionary = import_dictionary(*seeds, DictionaryFormat::kCsv);
  }
  const auto mutex = session_mutex(session.id);
  std::lock_guard<std::mutex> guard(*mutex);
  store_.save(session);
  return session;
}

Session WorkbenchService::get_session(std::string_view id) const {
  const auto mutex = session_mutex(id);
  std::lock_guard<std::mutex> guard(*mutex);
  return store_.load(id);
}

Session WorkbenchService::add_entity(std::string_view id,
                                     std::string_view surface, Label label) {
  return mutate(id, [&](const Session &session) {
    return with_dictionary(
        session,
        seedforge::add_entity(session.dictionary, surface, label,
                              session.iteration));
  });
}

Session WorkbenchService::update_entity(std::string_view id,
                                        std::string_view surface,
                                        std::optional<std::string> new_surface,
                                        std::optional<bool> active) {
  if (!new_surface && !active) {
    throw invalid("body", "expected new_surface and/or active");
  }
  return mutate(id, [&](const Session &session) {
    Dictionary dict = session.dictionary;
    std::string current(surface);
    if (!dict.contains(current)) {
      throw Error(ErrorCode::kNotFound, "no entity '" + current + "'");
    }
    if (new_surface) {
      dict = rename_entity(dict, current, *new_surface);
      current = *new_surface;
    }
    if (active) dict = set_active(dict, current, *active);
    return with_dictionary(session, std::move(dict));
  });
}

Session WorkbenchService::delete_entity(std::string_view id,
                                        std::string_view surface) {
  return mutate(id, [&](const Session &session) {
    return with_dictionary(session,
                           seedforge::delete_entity(session.dictionary, surface));
  });
}

Session WorkbenchService::import_entities(std::string_view id,
                                          std::string_view bytes,
                                          DictionaryFormat format) {
  Dictionary imported = import_dictionary(bytes, format);
  return mutate(id, [&](const Session &session) {
    return with_dictionary(session, imported);
  });
}

std::vector<CandidateEntry> WorkbenchService::expand_session(
    std::string_view id, const std::vector<std::string> &model_ids,
    long long k) {
  check_k(k);
  std::vector<CandidateEntry> candidates;
  mutate(id, [&](const Session &session) {
    ExpansionRequest request;
    request.positives = active_positive_set(session.dictionary);
    if (request.positives.empty()) {
      throw invalid("entities", "session has no active positive entities");
    }
    request.exclusions = all_surfaces(session.dictionary);
    for (const CandidateEntry &pending : session.pending) {
      request.exclusions.push_back(pending.surface);
    }
    request.k = static_cast<std::size_t>(k);
    candidates = run_models(registry_, request, model_ids);
    return replace_pending(session, candidates);
  });
  return candidates;
}

Session WorkbenchService::submit_feedback(
    std::string_view id, const std::vector<Judgment> &judgments) {
  return mutate(id, [&](const Session &session) {
    std::vector<FeedbackDecision> decisions;
    decisions.reserve(judgments.size());
    for (const Judgment &judgment : judgments) {
      CandidateEntry candidate;
      candidate.surface = judgment.surface;
      decisions.push_back({std::move(candidate), judgment.verdict});
    }
    return apply_feedback(session, decisions);
  });
}

std::string WorkbenchService::export_session(std::string_view id,
                                             DictionaryFormat format) const {
  if (format == DictionaryFormat::kSeeds) {
    throw invalid("format", "export supports csv or json");
  }
  return export_dictionary(get_session(id).dictionary, format);
}

std::vector<HighlightSpan> WorkbenchService::highlight_session(
    std::string_view id, std::string_view document,
    HighlightOptions options) const {
  const std::vector<std::string> entities =
      active_positive_set(get_session(id).dictionary);
  return highlight(document, entities, options);
}

}  // namespace seedforge
