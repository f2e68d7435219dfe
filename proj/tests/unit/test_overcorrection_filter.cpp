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

#include "ocgec/overcorrection_filter.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>

#include "generators.hpp"
#include "ocgec/error.hpp"
#include "oracles.hpp"

namespace ocgec {
namespace {

Sentence S(const char* utf8) { return Sentence::from_utf8(utf8); }

// Scores sentences from a fixed table of perplexities; anything else gets
// `fallback`.
class TableScorer final : public LMScorer {
 public:
  TableScorer(std::map<std::string, double> table, double fallback)
      : table_(std::move(table)), fallback_(fallback) {}
  NllScore score(const Sentence& s) const override {
    const auto it = table_.find(s.to_utf8());
    return NllScore{std::log(it == table_.end() ? fallback_ : it->second), 1};
  }

 private:
  std::map<std::string, double> table_;
  double fallback_;
};

// nll is a sum of per-unit costs, so edit effects never interact.
class AdditiveScorer final : public LMScorer {
 public:
  explicit AdditiveScorer(std::map<char32_t, double> cost) : cost_(std::move(cost)) {}
  NllScore score(const Sentence& s) const override {
    double total = 10.0;
    for (char32_t u : s.units()) total += cost_.at(u);
    return NllScore{total, 1};
  }

 private:
  std::map<char32_t, double> cost_;
};

CharNgramLM pattern_lm() {
  std::vector<Sentence> corpus;
  for (int i = 0; i < 20; ++i) corpus.push_back(S("我们学习中文。"));
  for (int i = 0; i < 20; ++i) corpus.push_back(S("他们喜欢看书。"));
  return CharNgramLM::train(corpus, 3, 0.1);
}

TEST(GranularityTest, ParseAndName) {
  for (Granularity g : {Granularity::kSentence, Granularity::kEdit, Granularity::kCombination}) {
    EXPECT_EQ(parse_granularity(granularity_name(g)), g);
  }
  EXPECT_THROW(parse_granularity("word"), ConfigError);
}

TEST(SentenceFilterTest, KeepsLowerPerplexityHypothesis) {
  const TableScorer scorer({{"src", 9.0}, {"hyp", 5.0}}, 100.0);
  EXPECT_EQ(filter_sentence_level(S("src"), S("hyp"), scorer).output, S("hyp"));
}

TEST(SentenceFilterTest, TieKeepsSource) {
  const TableScorer scorer({{"src", 5.0}, {"hyp", 5.0}}, 100.0);
  const FilterResult r = filter_sentence_level(S("src"), S("hyp"), scorer);
  EXPECT_EQ(r.output, S("src"));
  EXPECT_TRUE(r.kept.empty());
}

TEST(SentenceFilterTest, IdentityHypothesis) {
  const TableScorer scorer({}, 3.0);
  EXPECT_EQ(filter_sentence_level(S("abc"), S("abc"), scorer).output, S("abc"));
}

TEST(SentenceFilterTest, InDistributionCorrectionUnderNgram) {
  const auto lm = pattern_lm();
  const FilterResult r = filter_sentence_level(S("我们学系中文。"), S("我们学习中文。"), lm);
  EXPECT_EQ(r.output, S("我们学习中文。"));
  EXPECT_LT(r.perplexity, sentence_perplexity(lm, S("我们学系中文。")));
}

TEST(EditFilterTest, NoEditsReturnsSource) {
  const auto lm = pattern_lm();
  EXPECT_EQ(filter_edit_level(S("我们"), S("我们"), lm).output, S("我们"));
}

TEST(EditFilterTest, KeepsOnlyPerplexityLoweringEdit) {
  const auto lm = pattern_lm();
  // 系->习 restores the pattern; 文->X breaks it.
  const FilterResult r = filter_edit_level(S("我们学系中文。"), S("我们学习中X。"), lm);
  ASSERT_EQ(r.proposed.size(), 2u);
  EXPECT_EQ(r.kept, (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.output, S("我们学习中文。"));
}

TEST(EditFilterTest, AllEditsRaisePerplexity) {
  const auto lm = pattern_lm();
  const Sentence src = S("我们学习中文。");
  const FilterResult r = filter_edit_level(src, S("我X学习中Y。"), lm);
  EXPECT_EQ(r.output, src);
  EXPECT_TRUE(r.kept.empty());
}

TEST(CombinationFilterTest, NoEditsReturnsSource) {
  const TableScorer scorer({}, 3.0);
  EXPECT_EQ(filter_edit_combination(S("abc"), S("abc"), scorer).output, S("abc"));
}

TEST(CombinationFilterTest, TieBreaksTowardFewerEdits) {
  // Edits: [0,1)->X and [2,3)->Y.
  const TableScorer scorer({{"abc", 9.0}, {"Xbc", 4.0}, {"abY", 6.0}, {"XbY", 4.0}}, 100.0);
  const FilterResult r = filter_edit_combination(S("abc"), S("XbY"), scorer);
  EXPECT_EQ(r.kept, (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.output, S("Xbc"));
}

TEST(CombinationFilterTest, TieBreaksTowardSmallerIndices) {
  const TableScorer scorer({{"abc", 9.0}, {"Xbc", 4.0}, {"abY", 4.0}, {"XbY", 7.0}}, 100.0);
  EXPECT_EQ(filter_edit_combination(S("abc"), S("XbY"), scorer).output, S("Xbc"));
}

TEST(CombinationFilterTest, TieWithSourceKeepsSource) {
  const TableScorer scorer({{"abc", 4.0}, {"Xbc", 4.0}, {"abY", 5.0}, {"XbY", 5.0}}, 100.0);
  EXPECT_EQ(filter_edit_combination(S("abc"), S("XbY"), scorer).output, S("abc"));
}

TEST(CombinationFilterTest, SixEditsMatchBruteForce) {
  const auto lm = pattern_lm();
  const Sentence src = S("我们学系中文。他们喜欢看书。");
  const Sentence hyp = S("X们学习中Y。他Z喜欢W书Q");
  const FilterResult r = filter_edit_combination(src, hyp, lm);
  ASSERT_EQ(r.proposed.size(), 6u);
  EXPECT_FALSE(r.beam_search_used);
  const auto best = oracle::best_subset(src, r.proposed, lm);
  EXPECT_EQ(r.kept, best);
  EXPECT_EQ(r.output, apply_edits(src, r.proposed.subset(best)));
}

TEST(CombinationFilterTest, BeamSearchBeyondCutoff) {
  const auto lm = pattern_lm();
  const Sentence src = S("我们学系中文。他们喜欢看书。");
  const Sentence hyp = S("X们学习中Y。他Z喜欢W书Q");
  const FilterResult r = filter_edit_combination(src, hyp, lm, {3, 2});
  EXPECT_TRUE(r.beam_search_used);
  EXPECT_LE(r.perplexity, sentence_perplexity(lm, src));
  EXPECT_LE(r.perplexity, sentence_perplexity(lm, hyp));
  EXPECT_EQ(r.output, apply_edits(src, r.proposed.subset(r.kept)));
  EXPECT_THROW(filter_edit_combination(src, hyp, lm, {3, 0}), ConfigError);
}

TEST(CombinationFilterTest, ExhaustiveResultNoWorseThanEndpoints) {
  std::mt19937_64 rng(31);
  std::vector<Sentence> corpus;
  for (int i = 0; i < 40; ++i) corpus.emplace_back(gen::text(rng, 20, 8));
  const auto lm = CharNgramLM::train(corpus, 3, 0.1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::u32string src = gen::text(rng, 16, 10);
    const Sentence hyp(gen::mutate(rng, src, 4, 10));
    const FilterResult r = filter_edit_combination(Sentence(src), hyp, lm);
    EXPECT_LE(r.perplexity, sentence_perplexity(lm, Sentence(src)));
    EXPECT_LE(r.perplexity, sentence_perplexity(lm, hyp));
  }
}

TEST(FilterProperty, ConservativeAndDegenerateSafe) {
  std::mt19937_64 rng(32);
  std::vector<Sentence> corpus;
  for (int i = 0; i < 40; ++i) corpus.emplace_back(gen::text(rng, 20, 8));
  const auto lm = CharNgramLM::train(corpus, 3, 0.1);
  for (int trial = 0; trial < 200; ++trial) {
    const Sentence src(gen::text(rng, 16, 10));
    const Sentence hyp(gen::mutate(rng, src.units(), 4, 10));
    for (Granularity g : {Granularity::kSentence, Granularity::kEdit, Granularity::kCombination}) {
      const FilterResult r = apply_filter(g, src, hyp, lm);
      EXPECT_EQ(r.proposed, extract_edits(src, hyp));
      EXPECT_TRUE(std::is_sorted(r.kept.begin(), r.kept.end()));
      EXPECT_EQ(r.output, apply_edits(src, r.proposed.subset(r.kept)));
      EXPECT_EQ(apply_filter(g, src, src, lm).output, src);
    }
  }
}

TEST(FilterProperty, EditLevelEqualsCombinationForIndependentEdits) {
  std::mt19937_64 rng(33);
  std::map<char32_t, double> cost;
  for (char32_t c : std::u32string(U"abcdefgh")) cost[c] = 0.5 * double(gen::below(rng, 9));
  const AdditiveScorer scorer(cost);
  for (int trial = 0; trial < 300; ++trial) {
    const std::u32string src = gen::text(rng, 14, 8);
    const Sentence hyp(gen::mutate(rng, src, 4, 8));
    EXPECT_EQ(filter_edit_level(Sentence(src), hyp, scorer).output,
              filter_edit_combination(Sentence(src), hyp, scorer).output);
  }
}

}  // namespace
}  // namespace ocgec
