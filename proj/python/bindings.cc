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

// Python bindings for the SeedForge core library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "seedforge/category.h"
#include "seedforge/dictionary.h"
#include "seedforge/embedding.h"
#include "seedforge/error.h"
#include "seedforge/highlight.h"

namespace py = pybind11;
using namespace seedforge;

namespace {

DictionaryFormat format_from(const std::string &name) {
  return parse_dictionary_format(name);
}

std::string candidate_repr(const CandidateEntry &c) {
  return "Candidate(surface=" + py::repr(py::str(c.surface)).cast<std::string>() +
         ", score=" + std::to_string(c.score) +
         ", origin=" + py::repr(py::str(c.origin)).cast<std::string>() +
         ", model=" + py::repr(py::str(c.model)).cast<std::string>() + ")";
}

py::dict embedding_report(const EmbeddingLoadReport &r) {
  py::dict d;
  d["lines"] = r.lines;
  d["skipped_malformed"] = r.skipped_malformed;
  d["skipped_zero_norm"] = r.skipped_zero_norm;
  d["skipped_duplicate"] = r.skipped_duplicate;
  d["first_malformed_line"] = r.first_malformed_line;
  return d;
}

}  // namespace

PYBIND11_MODULE(_seedforge, m) {
  m.doc() = "SeedForge core: embedding and category expansion, dictionaries, highlighting";

  static py::exception<Error> error_type(m, "SeedforgeError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error &e) {
      py::object instance = py::handle(error_type.ptr())(py::str(e.what()));
      instance.attr("code") = std::string(error_code_name(e.code()));
      instance.attr("detail") = e.detail();
      instance.attr("line") = e.line();
      PyErr_SetObject(error_type.ptr(), instance.ptr());
    }
  });

  py::class_<CandidateEntry>(m, "Candidate")
      .def(py::init<std::string, double, std::string, std::string>(),
           py::arg("surface"), py::arg("score"), py::arg("origin"), py::arg("model"))
      .def_readonly("surface", &CandidateEntry::surface)
      .def_readonly("score", &CandidateEntry::score)
      .def_readonly("origin", &CandidateEntry::origin)
      .def_readonly("model", &CandidateEntry::model)
      .def("__eq__", [](const CandidateEntry &a, const CandidateEntry &b) { return a == b; })
      .def("__repr__", &candidate_repr);

  // Embeddings.
  py::class_<EmbeddingStore>(m, "EmbeddingStore")
      .def_property_readonly("model_id", &EmbeddingStore::model_id)
      .def_property_readonly("dimension", &EmbeddingStore::dimension)
      .def("__len__", &EmbeddingStore::size)
      .def("__contains__", [](const EmbeddingStore &s, const std::string &t) {
        return s.find(t).has_value();
      })
      .def("tokens", [](const EmbeddingStore &s) {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.token(i));
        return out;
      })
      .def("vector", [](const EmbeddingStore &s, const std::string &token) {
        const auto row = s.find(token);
        if (!row) throw Error(ErrorCode::kNotFound, "no token '" + token + "'");
        const auto v = s.vector(*row);
        return std::vector<double>(v.begin(), v.end());
      }, "Stored unit vector of an exact token.");

  m.def("embedding_store",
        [](std::size_t dimension,
           const std::vector<std::pair<std::string, std::vector<double>>> &rows,
           const std::string &model_id) {
          EmbeddingStore::Builder builder(dimension);
          for (const auto &[token, values] : rows) builder.add(token, values);
          return std::move(builder).build(model_id);
        },
        py::arg("dimension"), py::arg("rows"), py::arg("model_id") = "emb:memory",
        "Builds a store from (token, vector) pairs; zero, duplicate and "
        "wrong-length rows are dropped.");

  m.def("load_embeddings",
        [](const std::string &path, const std::string &model_id) {
          LoadedEmbeddings loaded = load_embeddings(path, model_id);
          return py::make_tuple(std::move(loaded.store), embedding_report(loaded.report));
        },
        py::arg("path"), py::arg("model_id") = "",
        "Loads a GloVe text file (optionally gzipped). Returns (store, report).");

  m.def("lookup_vector", &lookup_vector, py::arg("store"), py::arg("surface"));

  m.def("expand",
        [](const EmbeddingStore &store, std::vector<std::string> positives,
           std::vector<std::string> exclusions, std::size_t k) {
          return expand(store, {std::move(positives), std::move(exclusions), k});
        },
        py::arg("store"), py::arg("positives"), py::arg("exclusions") = std::vector<std::string>{},
        py::arg("k") = 20);

  // Categories.
  py::class_<CategoryIndex>(m, "CategoryIndex")
      .def_static("from_pairs",
                  [](const std::string &model_id,
                     const std::vector<CategoryIndex::Pair> &pairs) {
                    return CategoryIndex::from_pairs(model_id, pairs);
                  },
                  py::arg("model_id"), py::arg("pairs"))
      .def_property_readonly("model_id", &CategoryIndex::model_id)
      .def_property_readonly("pair_count", &CategoryIndex::pair_count)
      .def("categories_of", &CategoryIndex::categories_of)
      .def("members", &CategoryIndex::members);

  m.def("load_kb",
        [](const std::string &path, const std::string &model_id) {
          LoadedKb loaded = load_kb(path, model_id);
          py::dict report;
          report["lines"] = loaded.report.lines;
          report["duplicate_pairs"] = loaded.report.duplicate_pairs;
          return py::make_tuple(std::move(loaded.index), report);
        },
        py::arg("path"), py::arg("model_id") = "");

  py::class_<CategorySuggestion>(m, "CategorySuggestion")
      .def_readonly("category", &CategorySuggestion::category)
      .def_readonly("support", &CategorySuggestion::support)
      .def_readonly("matched_seeds", &CategorySuggestion::matched_seeds);

  m.def("suggest_categories",
        [](const CategoryIndex &index, const std::vector<std::string> &positives,
           double min_support) { return suggest_categories(index, positives, min_support); },
        py::arg("index"), py::arg("positives"), py::arg("min_support") = kDefaultMinSupport);

  m.def("expand_by_category",
        [](const CategoryIndex &index, std::vector<std::string> positives,
           std::vector<std::string> exclusions, std::size_t k, double min_support) {
          return expand_by_category(
              index, {std::move(positives), std::move(exclusions), k}, min_support);
        },
        py::arg("index"), py::arg("positives"), py::arg("exclusions") = std::vector<std::string>{},
        py::arg("k") = 20, py::arg("min_support") = kDefaultMinSupport);

  // Highlighting. Offsets are byte offsets into the UTF-8 encoding.
  py::class_<HighlightSpan>(m, "Span")
      .def(py::init<std::size_t, std::size_t, std::string>(),
           py::arg("start"), py::arg("end"), py::arg("surface"))
      .def_readonly("start", &HighlightSpan::start)
      .def_readonly("end", &HighlightSpan::end)
      .def_readonly("surface", &HighlightSpan::surface)
      .def("__eq__", [](const HighlightSpan &a, const HighlightSpan &b) { return a == b; })
      .def("__repr__", [](const HighlightSpan &s) {
        return "Span(" + std::to_string(s.start) + ", " + std::to_string(s.end) +
               ", " + py::repr(py::str(s.surface)).cast<std::string>() + ")";
      });

  m.def("highlight",
        [](const std::string &document, const std::vector<std::string> &entities,
           bool case_insensitive, bool word_boundary) {
          return highlight(document, entities, {case_insensitive, word_boundary});
        },
        py::arg("document"), py::arg("entities"), py::arg("case_insensitive") = true,
        py::arg("word_boundary") = true);

  m.def("render_annotated",
        [](const std::string &document, const std::vector<HighlightSpan> &spans,
           const std::string &format) {
          if (format != "html" && format != "json") {
            throw Error(ErrorCode::kInvalidArgument, "format must be html or json");
          }
          return render_annotated(document, spans,
                                  format == "html" ? AnnotationFormat::kHtml
                                                   : AnnotationFormat::kJson);
        },
        py::arg("document"), py::arg("spans"), py::arg("format") = "html");

  // Dictionaries.
  py::enum_<Label>(m, "Label")
      .value("POSITIVE", Label::kPositive)
      .value("NEGATIVE", Label::kNegative);

  py::class_<EntityEntry>(m, "Entry")
      .def_readonly("surface", &EntityEntry::surface)
      .def_readonly("label", &EntityEntry::label)
      .def_readonly("origin", &EntityEntry::origin)
      .def_readonly("score", &EntityEntry::score)
      .def_readonly("active", &EntityEntry::active)
      .def_readonly("model", &EntityEntry::model)
      .def_readonly("iteration", &EntityEntry::iteration);

  py::class_<Dictionary>(m, "Dictionary")
      .def(py::init<>())
      .def_property_readonly("entries", &Dictionary::entries)
      .def("__len__", &Dictionary::size)
      .def("__contains__", &Dictionary::contains)
      .def("__eq__", [](const Dictionary &a, const Dictionary &b) { return a == b; })
      .def("add", [](const Dictionary &d, const std::string &surface, Label label) {
        return add_entity(d, surface, label);
      }, py::arg("surface"), py::arg("label") = Label::kPositive)
      .def("rename", [](const Dictionary &d, const std::string &from, const std::string &to) {
        return rename_entity(d, from, to);
      })
      .def("delete", [](const Dictionary &d, const std::string &s) { return delete_entity(d, s); })
      .def("set_active", [](const Dictionary &d, const std::string &s, bool active) {
        return set_active(d, s, active);
      })
      .def("active_positives", &active_positive_set);

  m.def("import_dictionary",
        [](py::bytes data, const std::string &format) {
          return import_dictionary(std::string(data), format_from(format));
        },
        py::arg("data"), py::arg("format") = "csv");
  m.def("export_dictionary",
        [](const Dictionary &d, const std::string &format) {
          return py::bytes(export_dictionary(d, format_from(format)));
        },
        py::arg("dictionary"), py::arg("format") = "csv");
}
