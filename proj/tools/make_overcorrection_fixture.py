#!/usr/bin/env python3
# Copyright 2026 The ocgec Authors
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

"""Regenerates the synthetic fixtures under fixtures/.

overcorrection/
  lm_train.txt     clean pattern sentences for the n-gram scorer
  source.txt       sentences with at most one in-vocabulary substitution
  hypothesis.txt   gold fix plus out-of-vocabulary spurious substitutions
  references.tsv   source TAB gold
pipeline/
  corpus.tsv       erroneous TAB clean pairs for k-fold cross inference

The output is frozen; rerunning with the same seed reproduces it.
"""

import argparse
import itertools
import pathlib
import random

SUBJECTS = ["我们", "他们", "老师", "学生们", "朋友们"]
VERBS = ["喜欢", "开始", "继续", "认真"]
ACTIONS = ["学习", "阅读", "研究", "讨论"]
OBJECTS = ["中文", "历史", "数学", "小说", "音乐"]
SPURIOUS = "甲乙丙丁戊己庚辛壬癸"


def clean_sentences():
    return ["".join(p) + "。" for p in itertools.product(SUBJECTS, VERBS, ACTIONS, OBJECTS)]


def substitute(rng, sentence, vocab, forbidden):
    """Replaces one non-final character with another in-vocabulary one."""
    while True:
        pos = rng.randrange(len(sentence) - 1)
        choices = sorted(vocab - {sentence[pos]})
        bad = sentence[:pos] + rng.choice(choices) + sentence[pos + 1:]
        if bad not in forbidden:
            return bad, pos


def spurious_positions(rng, length, avoid, count):
    picked = []
    candidates = list(range(length - 1))
    rng.shuffle(candidates)
    for p in candidates:
        if len(picked) == count:
            break
        if all(abs(p - q) >= 2 for q in picked + avoid):
            picked.append(p)
    return sorted(picked)


def build(seed, eval_size, corpus_size):
    rng = random.Random(seed)
    clean = clean_sentences()
    rng.shuffle(clean)
    lm_train = sorted(clean[: len(clean) * 3 // 4])
    held_out = clean[len(clean) * 3 // 4:]
    vocab = set("".join(clean)) - {"。"}
    assert not vocab & set(SPURIOUS)
    forbidden = set(clean)

    sources, hyps, refs = [], [], []
    for i in range(eval_size):
        gold = held_out[i % len(held_out)] if i % 2 else lm_train[rng.randrange(len(lm_train))]
        if i % 5 == 4:
            src, fix = gold, []
        else:
            src, pos = substitute(rng, gold, vocab, forbidden)
            fix = [pos]
        hyp = list(gold)
        for p in spurious_positions(rng, len(gold), fix, 1 + i % 2):
            hyp[p] = rng.choice(SPURIOUS)
        sources.append(src)
        hyps.append("".join(hyp))
        refs.append(src + "\t" + gold)

    corpus = []
    for _ in range(corpus_size):
        gold = clean[rng.randrange(len(clean))]
        src, _ = substitute(rng, gold, vocab, forbidden)
        corpus.append(src + "\t" + gold)
    return lm_train, sources, hyps, refs, corpus


def write_lines(path, lines):
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--root", type=pathlib.Path,
                        default=pathlib.Path(__file__).resolve().parent.parent / "fixtures")
    parser.add_argument("--seed", type=int, default=20240521)
    parser.add_argument("--eval-size", type=int, default=60)
    parser.add_argument("--corpus-size", type=int, default=40)
    args = parser.parse_args()

    lm_train, sources, hyps, refs, corpus = build(args.seed, args.eval_size, args.corpus_size)
    over = args.root / "overcorrection"
    over.mkdir(parents=True, exist_ok=True)
    write_lines(over / "lm_train.txt", lm_train)
    write_lines(over / "source.txt", sources)
    write_lines(over / "hypothesis.txt", hyps)
    write_lines(over / "references.tsv", refs)
    pipe = args.root / "pipeline"
    pipe.mkdir(parents=True, exist_ok=True)
    write_lines(pipe / "corpus.tsv", corpus)


if __name__ == "__main__":
    main()
