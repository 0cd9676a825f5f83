# Copyright 2026 The SeedForge Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python access to the SeedForge entity workbench core."""

from ._seedforge import (
    Candidate,
    CategoryIndex,
    CategorySuggestion,
    Dictionary,
    EmbeddingStore,
    Entry,
    Label,
    SeedforgeError,
    Span,
    embedding_store,
    expand,
    expand_by_category,
    export_dictionary,
    highlight,
    import_dictionary,
    load_embeddings,
    load_kb,
    lookup_vector,
    render_annotated,
    suggest_categories,
)

__all__ = [
    "Candidate",
    "CategoryIndex",
    "CategorySuggestion",
    "Dictionary",
    "EmbeddingStore",
    "Entry",
    "Label",
    "SeedforgeError",
    "Span",
    "embedding_store",
    "expand",
    "expand_by_category",
    "export_dictionary",
    "highlight",
    "import_dictionary",
    "load_embeddings",
    "load_kb",
    "lookup_vector",
    "render_annotated",
    "suggest_categories",
]
