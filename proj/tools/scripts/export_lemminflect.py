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

"""Dumps noun and verb inflections from lemminflect's lookup table.

Usage: export_lemminflect.py <infl_lu.csv.gz> <out_dir>

Writes nouns_raw.tsv and verbs_raw.tsv (form, lemma, kind). The output is
the input of the `affordex_lexgen` tool, which computes the bundled lexicons
and exception tables under data/.
"""

import gzip
import sys

VERB_KINDS = ("VBD", "VBN", "VBG", "VBZ")


def usable(word):
    return word.isascii() and word.isalpha() and word.islower() and len(word) >= 2


def main():
    src, out_dir = sys.argv[1], sys.argv[2]
    nouns, verbs = set(), set()
    with gzip.open(src, "rt", encoding="utf-8") as f:
        for line in f:
            line = line.rstrip("\n")
            if not line:
                continue
            lemma, pos, forms = line.split(",", 2)
            if not usable(lemma):
                continue
            if pos == "noun":
                nouns.add((lemma, lemma, "lemma"))
                for form in forms.split("/"):
                    if usable(form) and form != lemma:
                        nouns.add((form, lemma, "plural"))
            elif pos == "verb":
                verbs.add((lemma, lemma, "base"))
                slots = forms.split(",")
                # An empty VBN slot means the participle equals the past form.
                if len(slots) == 4 and not slots[1]:
                    slots[1] = slots[0]
                for kind, slot in zip(VERB_KINDS, slots):
                    for form in slot.split("/"):
                        if usable(form):
                            verbs.add((form, lemma, kind))
    with open(f"{out_dir}/nouns_raw.tsv", "w", encoding="utf-8") as f:
        for row in sorted(nouns):
            f.write("\t".join(row) + "\n")
    with open(f"{out_dir}/verbs_raw.tsv", "w", encoding="utf-8") as f:
        for row in sorted(verbs):
            f.write("\t".join(row) + "\n")


if __name__ == "__main__":
    main()
