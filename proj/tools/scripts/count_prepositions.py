#!/usr/bin/env python3
# Copyright 2026 The Affordex Authors.
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

"""Counts verb/preposition associations in plain-text or bz2 corpora.

Usage: count_prepositions.py <verbs_raw.tsv> <out.tsv> <corpus>...

For every verb token, the first preposition within the next WINDOW tokens of
the same clause is counted against the verb's base form ("put the cup in
the sink" counts put/in). A preposition directly after the verb is a
particle ("put on", "cut off"), not the object-introducing preposition of a
two-object command, and is skipped. Pairs seen fewer than MIN_COUNT times are dropped.
Output lines are verb<TAB>preposition<TAB>count, sorted by verb, then by
descending count.
"""

import bz2
import collections
import re
import sys

PREPOSITIONS = {
    "about", "across", "against", "at", "behind", "by", "for", "from", "in",
    "inside", "into", "off", "on", "onto", "over", "through", "to", "under",
    "with",
}
DETERMINERS = {"a", "an", "the", "this", "that", "these", "those", "his",
               "her", "its", "their", "my", "your", "our", "some", "it",
               "them", "him", "me", "us"}
WINDOW = 4
MIN_COUNT = 3
CLAUSE = re.compile(r"[.;:!?,()\[\]{}|=<>\"]+")
WORD = re.compile(r"[a-z]+")
MARKUP = re.compile(r"\{\{.*?\}\}|<[^>]*>|&[a-z]+;|\[\[[^\]|]*\|", re.S)


def load_verbs(path):
    """form -> base, preferring the lemma a form inflects (found -> find)."""
    base, inflected = {}, {}
    with open(path, encoding="utf-8") as f:
        for line in f:
            form, lemma, kind = line.rstrip("\n").split("\t")
            if kind == "base":
                base.setdefault(form, lemma)
            else:
                inflected.setdefault(form, set()).add(lemma)
    out = dict(base)
    for form, lemmas in inflected.items():
        out[form] = sorted(lemmas)[0]
    return out


def read(path):
    opener = bz2.open if path.endswith(".bz2") else open
    with opener(path, "rt", encoding="utf-8", errors="replace") as f:
        return f.read()


def main():
    verbs = load_verbs(sys.argv[1])
    counts = collections.Counter()
    for path in sys.argv[3:]:
        text = MARKUP.sub(" ", read(path)).lower()
        for clause in CLAUSE.split(text):
            tokens = WORD.findall(clause)
            for i, tok in enumerate(tokens):
                verb = verbs.get(tok)
                if verb is None or tok in PREPOSITIONS or tok in DETERMINERS:
                    continue
                window = tokens[i + 1:i + 1 + WINDOW]
                if not window or window[0] in PREPOSITIONS:
                    continue
                for nxt in window[1:]:
                    if nxt in PREPOSITIONS:
                        counts[(verb, nxt)] += 1
                        break
    rows = [(v, p, c) for (v, p), c in counts.items() if c >= MIN_COUNT]
    rows.sort(key=lambda r: (r[0], -r[2], r[1]))
    with open(sys.argv[2], "w", encoding="utf-8") as f:
        f.write("# verb<TAB>preposition<TAB>count\n")
        for v, p, c in rows:
            f.write(f"{v}\t{p}\t{c}\n")


if __name__ == "__main__":
    main()
