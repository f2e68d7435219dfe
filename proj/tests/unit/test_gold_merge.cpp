// Copyright 2026 The ocgec Authors
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

#include "ocgec/gold_merge.hpp"

#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "ocgec/error.hpp"
#include "oracles.hpp"

namespace ocgec {
namespace {

Sentence S(const char* utf8) { return Sentence::from_utf8(utf8); }

Edit E(std::size_t start, std::size_t end, const char32_t* repl) {
  return Edit{start, end, repl, "R"};
}

TEST(EditsConflictTest, Examples) {
  EXPECT_TRUE(edits_conflict(E(2, 4, U"X"), E(3, 5, U"Y")));
  EXPECT_FALSE(edits_conflict(E(0, 2, U"X"), E(2, 4, U"Y")));
  EXPECT_TRUE(edits_conflict(E(3, 3, U"a"), E(3, 3, U"b")));
  EXPECT_FALSE(edits_conflict(E(2, 2, U"a"), E(3, 3, U"b")));
  EXPECT_TRUE(edits_conflict(E(3, 3, U"a"), E(2, 5, U"b")));
  EXPECT_TRUE(edits_conflict(E(2, 5, U"b"), E(3, 3, U"a")));
  EXPECT_FALSE(edits_conflict(E(2, 2, U"a"), E(2, 5, U"b")));
  EXPECT_FALSE(edits_conflict(E(5, 5, U"a"), E(2, 5, U"b")));
}

TEST(EditsConflictTest, AgreesWithUnitSetOracle) {
  for (std::size_t a0 = 0; a0 <= 6; ++a0) {
    for (std::size_t a1 = a0; a1 <= 6; ++a1) {
      for (std::size_t b0 = 0; b0 <= 6; ++b0) {
        for (std::size_t b1 = b0; b1 <= 6; ++b1) {
          const Edit a = E(a0, a1, U"x");
          const Edit b = E(b0, b1, U"y");
          EXPECT_EQ(edits_conflict(a, b), oracle::intervals_conflict(a, b))
              << a0 << "," << a1 << " vs " << b0 << "," << b1;
          EXPECT_EQ(edits_conflict(a, b), edits_conflict(b, a));
        }
      }
    }
  }
}

TEST(MergeEditSetsTest, EmptyGoldKeepsCandidate) {
  const EditSet c(6, {E(1, 2, U"x"), E(4, 4, U"y")});
  EXPECT_EQ(merge_edit_sets(c, EditSet(6)), c);
}

TEST(MergeEditSetsTest, EmptyCandidateGivesGold) {
  const EditSet g(6, {E(0, 1, U"")});
  EXPECT_EQ(merge_edit_sets(EditSet(6), g), g);
}

TEST(MergeEditSetsTest, GoldWinsOnOverlap) {
  const EditSet c(6, {E(3, 5, U"Y")});
  const EditSet g(6, {E(2, 4, U"X")});
  EXPECT_EQ(merge_edit_sets(c, g), g);
}

TEST(MergeEditSetsTest, DisjointEditsAreCombinedInOrder) {
  const EditSet c(8, {E(0, 1, U"a"), E(3, 4, U"b"), E(7, 8, U"c")});
  const EditSet g(8, {E(3, 5, U"G"), E(6, 6, U"h")});
  const EditSet merged = merge_edit_sets(c, g);
  EXPECT_EQ(merged, EditSet(8, {E(0, 1, U"a"), E(3, 5, U"G"), E(6, 6, U"h"), E(7, 8, U"c")}));
}

TEST(MergeEditSetsTest, TouchingEditsBothSurvive) {
  const EditSet c(4, {E(0, 2, U"x")});
  const EditSet g(4, {E(2, 3, U"y")});
  EXPECT_EQ(merge_edit_sets(c, g).size(), 2u);
}

TEST(MergeEditSetsTest, LengthMismatchThrows) {
  EXPECT_THROW(merge_edit_sets(EditSet(3), EditSet(4)), MismatchError);
}

TEST(MergeEditSetsProperty, OracleAgreementIdempotenceAndBounds) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = gen::below(rng, 16);
    const EditSet c = gen::edit_set(rng, n, 5, 6);
    const EditSet g = gen::edit_set(rng, n, 5, 6);
    const EditSet merged = merge_edit_sets(c, g);
    for (const Edit& ge : g) {
      EXPECT_NE(std::find(merged.begin(), merged.end(), ge), merged.end());
    }
    std::size_t expected = g.size();
    for (const Edit& ce : c) {
      bool conflict = false;
      for (const Edit& ge : g) conflict = conflict || oracle::intervals_conflict(ce, ge);
      const bool present = std::find(merged.begin(), merged.end(), ce) != merged.end();
      if (!conflict) {
        ++expected;
        EXPECT_TRUE(present);
      }
    }
    EXPECT_EQ(merged.size(), expected);
    EXPECT_GE(merged.size(), g.size());
    EXPECT_LE(merged.size(), g.size() + c.size());
    EXPECT_EQ(merge_edit_sets(g, g), g);
  }
}

TEST(BuildCandidateTest, TrivialCases) {
  const Sentence src = S("我们学系中文");
  const Sentence gold = S("我们学习中文");
  EXPECT_EQ(build_candidate(src, gold, gold), gold);
  EXPECT_EQ(build_candidate(src, src, gold), gold);
}

TEST(BuildCandidateTest, KeepsDisjointSystemEdit) {
  const Sentence src = S("abcdefgh");
  const Sentence gold = apply_edits(src, EditSet(8, {E(1, 2, U"B")}));
  const Sentence sys = apply_edits(src, EditSet(8, {E(6, 7, U"G")}));
  const Sentence cand = build_candidate(src, sys, gold);
  EXPECT_EQ(cand, S("aBcdefGh"));
  EXPECT_EQ(cand[1], U'B');
  EXPECT_EQ(cand[6], U'G');
}

TEST(BuildCandidateTest, GoldOverridesConflictingSystemEdit) {
  const Sentence src = S("abcdef");
  const Sentence gold = S("abXdef");
  const Sentence sys = S("abYZef");
  EXPECT_EQ(build_candidate(src, sys, gold), S("abXdef"));
}

TEST(BuildCandidateTest, MergedSetRealizesEveryGoldEdit) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::u32string src = gen::text(rng, 24, 8);
    const Sentence s(src);
    const Sentence gold(gen::mutate(rng, src, 3, 8));
    const Sentence sys(gen::mutate(rng, src, 3, 8));
    const EditSet gold_edits = extract_edits(s, gold);
    const EditSet merged = merge_edit_sets(extract_edits(s, sys), gold_edits);
    for (const Edit& g : gold_edits) {
      EXPECT_NE(std::find(merged.begin(), merged.end(), g), merged.end());
    }
    EXPECT_EQ(apply_edits(s, merged), build_candidate(s, sys, gold));
  }
}

// Re-aligning the candidate against the source does not always reproduce the
// gold edits verbatim: the union of two edit scripts can admit a cheaper
// alignment.
TEST(BuildCandidateTest, RealignmentMayDifferFromMergedEdits) {
  const Sentence src = S("abcd");
  const Sentence gold = S("cd");
  const Sentence sys = S("abcabd");
  const Sentence cand = build_candidate(src, sys, gold);
  const EditSet merged = merge_edit_sets(extract_edits(src, sys), extract_edits(src, gold));
  EXPECT_EQ(apply_edits(src, merged), cand);
  EXPECT_EQ(oracle::levenshtein(src.units(), cand.units()), 2u);
  EXPECT_GT(oracle::script_cost(merged), 2u);
}

}  // namespace
}  // namespace ocgec
