#!/usr/bin/env python3
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

"""Regenerates the committed desk-scale fixtures under data/fixtures/.

Outputs:
  desk_kb.tsv               200 unique entity<TAB>category pairs
  desk50.txt.gz             50,000 tokens x 50 dims, GloVe text format
  desk50_expand_golden.csv  top-20 for seeds kitchen,bath,balcony computed
                            with numpy (independent of the C++ code path)

Everything is seeded; rerunning produces byte-identical files.
"""

import argparse
import gzip
import io
import pathlib

import numpy as np

CATEGORIES = {
    "programming_language": [
        "python", "java", "rust", "c++", "haskell", "ocaml", "go", "kotlin",
        "scala", "ruby", "perl", "javascript", "typescript", "swift",
        "erlang", "elixir", "clojure", "fortran", "cobol", "lua", "julia",
        "r", "matlab", "prolog", "lisp"],
    "housing_equipment": [
        "kitchen", "bath", "balcony", "system kitchen", "walk-in closet",
        "floor heating", "dishwasher", "bathroom dryer", "intercom",
        "auto-lock", "elevator", "storage room", "loft", "washlet", "garden",
        "parking space", "bicycle parking", "delivery box", "air conditioner",
        "shower", "bathtub", "washing machine space", "veranda", "terrace",
        "fireplace"],
    "cuisine": [
        "sushi", "ramen", "tempura", "pizza", "pasta", "paella", "curry",
        "pho", "tacos", "burrito", "kimchi", "dim sum", "falafel", "couscous",
        "risotto", "lasagna", "udon", "soba", "bibimbap", "gyoza"],
    "ingredient": [
        "rice", "miso", "soy sauce", "tofu", "basil", "garlic", "ginger",
        "saffron", "cumin", "chili", "tomato", "mozzarella", "nori", "wasabi",
        "mirin", "sesame", "onion", "olive oil", "coriander", "lemongrass"],
    "city": [
        "tokyo", "osaka", "kyoto", "paris", "london", "berlin", "madrid",
        "rome", "new york", "seoul", "bangkok", "hanoi", "lima", "cairo",
        "sydney"],
    "color": [
        "red", "blue", "green", "rust", "teal", "amber", "ivory", "crimson",
        "olive", "saffron", "coral", "indigo"],
    "job_skill": [
        "python", "java", "sql", "excel", "accounting", "negotiation",
        "project management", "machine learning", "data analysis",
        "public speaking", "javascript", "go", "copywriting", "photoshop",
        "tax law"],
    "web_framework": [
        "django", "flask", "rails", "spring", "react", "vue", "angular",
        "express", "laravel", "phoenix"],
    "database": [
        "postgresql", "mysql", "sqlite", "mongodb", "redis", "cassandra",
        "oracle", "neo4j", "elasticsearch", "dynamodb"],
    "animal": [
        "python", "jaguar", "cobra", "eagle", "falcon", "panda", "otter",
        "lynx", "viper", "heron", "koala", "penguin"],
    "sport": [
        "soccer", "tennis", "golf", "polo", "cricket", "rugby", "judo",
        "karate", "sumo", "badminton", "hockey", "cycling"],
    "gemstone": [
        "ruby", "amber", "jade", "opal", "pearl", "onyx", "topaz", "garnet",
        "sapphire", "emerald", "coral", "diamond"],
    "instrument": [
        "piano", "violin", "cello", "flute", "guitar", "drums", "harp",
        "oboe", "koto", "shamisen", "sitar", "banjo"],
}

VOCAB_SIZE = 50_000
DIM = 50
GOLDEN_SEEDS = ["kitchen", "bath", "balcony"]
GOLDEN_K = 20


def kb_pairs():
    pairs = []
    for category, members in CATEGORIES.items():
        for member in members:
            pairs.append((member, category))
    assert len(pairs) == len(set(pairs)) == 200, len(pairs)
    return pairs


def write_kb(out_dir):
    buf = io.StringIO()
    buf.write("# desk-scale is-a facts: entity<TAB>category\n")
    for entity, category in kb_pairs():
        buf.write(f"{entity}\t{category}\n")
    (out_dir / "desk_kb.tsv").write_text(buf.getvalue(), encoding="utf-8")


def quantize(row):
    return [f"{v:.1f}".replace("-0.0", "0.0") for v in row]


def build_embeddings():
    rng = np.random.default_rng(20260101)
    centers = {c: rng.normal(0.0, 0.45, DIM) for c in CATEGORIES}
    memberships = {}
    for entity, category in kb_pairs():
        memberships.setdefault(entity, []).append(category)

    tokens, rows = [], []
    for entity in sorted(memberships):
        center = np.mean([centers[c] for c in memberships[entity]], axis=0)
        tokens.append(entity.replace(" ", "_"))
        rows.append(quantize(center + rng.normal(0.0, 0.22, DIM)))
    filler = VOCAB_SIZE - len(tokens)
    for i in range(filler):
        tokens.append(f"w{i:05d}")
        rows.append(quantize(rng.normal(0.0, 0.45, DIM)))
    assert len(set(tokens)) == VOCAB_SIZE
    return tokens, rows


def write_embeddings(out_dir, tokens, rows):
    text = "".join(f"{t} {' '.join(r)}\n" for t, r in zip(tokens, rows))
    path = out_dir / "desk50.txt.gz"
    with open(path, "wb") as raw:
        with gzip.GzipFile(filename="", mode="wb", fileobj=raw, mtime=0,
                           compresslevel=9) as gz:
            gz.write(text.encode("utf-8"))


def golden_expand(tokens, rows):
    # Mirrors the documented contract: unit-normalize in float64, store as
    # float32, cosine = dot in float64, max over seeds, ties -> smaller seed,
    # rank by score desc then surface asc.
    raw = np.array([[float(v) for v in r] for r in rows], dtype=np.float64)
    norms = np.linalg.norm(raw, axis=1)
    unit = (raw / norms[:, None]).astype(np.float32).astype(np.float64)
    index = {t: i for i, t in enumerate(tokens)}
    seeds = sorted(GOLDEN_SEEDS)
    best = np.full(len(tokens), -np.inf)
    origin = np.empty(len(tokens), dtype=object)
    for seed in seeds:
        scores = unit @ unit[index[seed]]
        better = scores > best
        best[better] = scores[better]
        origin[better] = seed
    excluded = {s.casefold() for s in GOLDEN_SEEDS}
    ranked = sorted(
        (i for i, t in enumerate(tokens) if t.casefold() not in excluded),
        key=lambda i: (-best[i], tokens[i]))[:GOLDEN_K]
    lines = ["surface,score,origin,model"]
    for i in ranked:
        lines.append(f"{tokens[i]},{best[i]:.6f},{origin[i]},emb:desk50")
    return "\n".join(lines) + "\n"


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(
        pathlib.Path(__file__).resolve().parent.parent / "data" / "fixtures"))
    args = parser.parse_args()
    out_dir = pathlib.Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    write_kb(out_dir)
    tokens, rows = build_embeddings()
    write_embeddings(out_dir, tokens, rows)
    (out_dir / "desk50_expand_golden.csv").write_text(
        golden_expand(tokens, rows), encoding="utf-8")


if __name__ == "__main__":
    main()
