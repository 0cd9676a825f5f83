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

#ifndef SEEDFORGE_SERVICE_H_
#define SEEDFORGE_SERVICE_H_

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seedforge/candidate.h"
#include "seedforge/category.h"
#include "seedforge/embedding.h"
#include "seedforge/highlight.h"
#include "seedforge/session.h"
#include "seedforge/session_store.h"

namespace seedforge {

enum class ModelKind { kEmbedding, kCategory };

std::string_view model_kind_name(ModelKind kind);

// One Expansion API implementation. Implementations are immutable and may be
// called concurrently.
class ExpansionBackend {
 public:
  virtual ~ExpansionBackend() = default;
  virtual ModelKind kind() const = 0;
  virtual std::vector<CandidateEntry> expand(
      const ExpansionRequest &request) const = 0;
};

class EmbeddingBackend : public ExpansionBackend {
 public:
  explicit EmbeddingBackend(std::shared_ptr<const EmbeddingStore> store)
      : store_(std::move(store)) {}
  ModelKind kind() const override { return ModelKind::kEmbedding; }
  std::vector<CandidateEntry> expand(
      const ExpansionRequest &request) const override;

 private:
  std::shared_ptr<const EmbeddingStore> store_;
};

class CategoryBackend : public ExpansionBackend {
 public:
  CategoryBackend(std::shared_ptr<const CategoryIndex> index,
                  double min_support = kDefaultMinSupport)
      : index_(std::move(index)), min_support_(min_support) {}
  ModelKind kind() const override { return ModelKind::kCategory; }
  std::vector<CandidateEntry> expand(
      const ExpansionRequest &request) const override;

 private:
  std::shared_ptr<const CategoryIndex> index_;
  double min_support_;
};

// Stands in for a model whose resource failed to load; every call throws
// ResourceUnavailable.
class UnavailableBackend : public ExpansionBackend {
 public:
  UnavailableBackend(ModelKind kind, std::string reason)
      : kind_(kind), reason_(std::move(reason)) {}
  ModelKind kind() const override { return kind_; }
  std::vector<CandidateEntry> expand(
      const ExpansionRequest &request) const override;

 private:
  ModelKind kind_;
  std::string reason_;
};

struct ModelDescriptor {
  std::string id;
  ModelKind kind;
};

class ModelRegistry {
 public:
  // Throws InvalidArgument on an empty or already registered id.
  void add(std::string id, std::shared_ptr<const ExpansionBackend> backend);

  const ExpansionBackend *find(std::string_view id) const;
  std::vector<ModelDescriptor> describe() const;  // sorted by id
  std::size_t size() const { return models_.size(); }
  bool empty() const { return models_.empty(); }

 private:
  std::map<std::string, std::shared_ptr<const ExpansionBackend>, std::less<>>
      models_;
};

struct ModelResult {
  std::string model_id;
  ModelKind kind;
  std::vector<CandidateEntry> candidates;
};

// Merges per-model candidate lists. Surfaces are unique under case folding;
// the higher score survives, with ties going to embedding models and then to
// the smaller model id. Output follows ranks_before, cut to k.
std::vector<CandidateEntry> merge_candidates(std::span<const ModelResult> results,
                                             std::size_t k);

inline constexpr std::size_t kMaxK = 1000;

// Transport-independent implementation of every HTTP endpoint. Mutations of
// one session are serialized; different sessions proceed in parallel.
class WorkbenchService {
 public:
  WorkbenchService(ModelRegistry registry, SessionStore store);

  std::vector<ModelDescriptor> models() const { return registry_.describe(); }

  // Stateless expansion: exclusions = entities. Throws InvalidArgument
  // (empty entities, k outside [1, kMaxK], unknown model),
  // ResourceUnavailable, NoResolvableSeed when no selected model resolves
  // any entity.
  std::vector<CandidateEntry> expand(const std::vector<std::string> &entities,
                                     const std::vector<std::string> &model_ids,
                                     long long k) const;

  Session create_session(std::string name,
                         std::optional<std::string_view> seeds = {});
  Session get_session(std::string_view id) const;
  Session add_entity(std::string_view id, std::string_view surface,
                     Label label);
  Session update_entity(std::string_view id, std::string_view surface,
                        std::optional<std::string> new_surface,
                        std::optional<bool> active);
  Session delete_entity(std::string_view id, std::string_view surface);
  // Replaces the dictionary with the imported one.
  Session import_entities(std::string_view id, std::string_view bytes,
                          DictionaryFormat format);

  // Expands the active positive set, excluding every dictionary surface and
  // every pending surface; the result replaces the pending batch.
  std::vector<CandidateEntry> expand_session(
      std::string_view id, const std::vector<std::string> &model_ids,
      long long k);

  struct Judgment {
    std::string surface;
    Verdict verdict;
  };
  Session submit_feedback(std::string_view id,
                          const std::vector<Judgment> &judgments);

  std::string export_session(std::string_view id,
                             DictionaryFormat format) const;

  // Highlights the session's active positive entities.
  std::vector<HighlightSpan> highlight_session(std::string_view id,
                                               std::string_view document,
                                               HighlightOptions options) const;

 private:
  std::shared_ptr<std::mutex> session_mutex(std::string_view id) const;

  template <typename Fn>
  Session mutate(std::string_view id, Fn &&fn);

  ModelRegistry registry_;
  SessionStore store_;
  mutable std::mutex locks_mutex_;
  mutable std::map<std::string, std::shared_ptr<std::mutex>, std::less<>>
      locks_;
};

}  // namespace seedforge

#endif  // SEEDFORGE_SERVICE_H_
