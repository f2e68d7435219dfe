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

#include "ocgec/gec_scorer.hpp"

#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "json.hpp"
#include "ocgec/error.hpp"
#include "oracles.hpp"

namespace ocgec {
namespace {

Edit E(std::size_t start, std::size_t end, const char32_t* repl) {
  return Edit{start, end, repl, "R"};
}

const Edit e1 = E(0, 1, U"x");
const Edit e2 = E(3, 4, U"y");
const Edit e3 = E(5, 5, U"z");

TEST(FBetaTest, PublishedRows) {
  EXPECT_NEAR(f_beta(0.5567, 0.3904, 0.5), 0.5130, 0.0005);
  EXPECT_NEAR(f_beta(0.5822, 0.2412, 0.5), 0.4539, 0.0005);
  EXPECT_NEAR(f_beta(0.3749, 0.3887, 0.5), 0.3776, 0.0005);
}

TEST(FBetaTest, TrivialAndDomain) {
  EXPECT_DOUBLE_EQ(f_beta(1.0, 1.0, 0.5), 1.0);
  EXPECT_DOUBLE_EQ(f_beta(0.7, 0.0, 0.5), 0.0);
  EXPECT_DOUBLE_EQ(f_beta(0.0, 0.0, 0.5), 0.0);
  EXPECT_THROW(f_beta(1.2, 0.5, 0.5), DomainError);
  EXPECT_THROW(f_beta(0.5, -0.1, 0.5), DomainError);
  EXPECT_THROW(f_beta(0.5, 0.5, 0.0), DomainError);
}

TEST(FBetaProperty, BetaOneIsHarmonicMean) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(0.001, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double p = u(rng), r = u(rng);
    EXPECT_NEAR(f_beta(p, r, 1.0), 2.0 / (1.0 / p + 1.0 / r), 1e-12);
  }
}

TEST(FBetaProperty, MonotoneInPrecisionAndRecall) {
  for (int i = 1; i <= 20; ++i) {
    for (int j = 1; j <= 20; ++j) {
      const double p = i / 20.0, r = j / 20.0;
      if (i < 20) {
        EXPECT_LE(f_beta(p, r, 0.5), f_beta(p + 0.05, r, 0.5));
      }
      if (j < 20) {
        EXPECT_LE(f_beta(p, r, 0.5), f_beta(p, r + 0.05, 0.5));
      }
    }
  }
}

TEST(ScoreSentenceTest, PerfectMatch) {
  const EditSet ref(6, {e1, e2});
  const std::vector<EditSet> refs{ref};
  EXPECT_EQ(score_sentence(ref, refs).counts, (EditCounts{2, 0, 0}));
}

TEST(ScoreSentenceTest, PartialOverlap) {
  const std::vector<EditSet> refs{EditSet(6, {e1, e2})};
  EXPECT_EQ(score_sentence(EditSet(6, {e1, e3}), refs).counts, (EditCounts{1, 1, 1}));
}

TEST(ScoreSentenceTest, TypeDoesNotAffectMatching) {
  Edit typed = e1;
  typed.type = "S";
  const std::vector<EditSet> refs{EditSet(6, {e1})};
  EXPECT_EQ(score_sentence(EditSet(6, {typed}), refs).counts, (EditCounts{1, 0, 0}));
}

TEST(ScoreSentenceTest, ChoosesBestReference) {
  const std::vector<EditSet> refs{EditSet(6, {e1}), EditSet(6, {e1, e2})};
  const SentenceScore s = score_sentence(EditSet(6, {e1}), refs);
  EXPECT_EQ(s.reference, 0u);
  EXPECT_EQ(s.counts, (EditCounts{1, 0, 0}));
}

TEST(ScoreSentenceTest, TiesPreferMoreTruePositivesThenFewerMisses) {
  // Empty hypothesis: every reference scores F = 0; fewest misses wins.
  const std::vector<EditSet> refs{EditSet(6, {e1, e2}), EditSet(6, {e3}), EditSet(6, {e2})};
  EXPECT_EQ(score_sentence(EditSet(6), refs).reference, 1u);
  // Both give F = 0 with one miss; the earlier index wins.
  EXPECT_EQ(score_sentence(EditSet(6), std::vector<EditSet>{EditSet(6, {e2}), EditSet(6, {e3})})
                .reference,
            0u);
}

TEST(ScoreSentenceTest, Errors) {
  EXPECT_THROW(score_sentence(EditSet(6), std::vector<EditSet>{}), ConfigError);
  EXPECT_THROW(score_sentence(EditSet(6), std::vector<EditSet>{EditSet(5)}), MismatchError);
}

TEST(ScoreSentenceTest, BothEmptyContributesNothing) {
  EXPECT_EQ(score_sentence(EditSet(3), std::vector<EditSet>{EditSet(3)}).counts,
            (EditCounts{0, 0, 0}));
}

TEST(AggregateTest, Examples) {
  EXPECT_EQ(aggregate(std::vector<EditCounts>{}).f_beta, 0.0);
  const ScoreReport one = aggregate(std::vector<EditCounts>{{3, 1, 2}});
  EXPECT_DOUBLE_EQ(one.precision, 0.75);
  EXPECT_DOUBLE_EQ(one.recall, 0.6);
  const ScoreReport two = aggregate(std::vector<EditCounts>{{1, 1, 0}, {1, 0, 1}});
  EXPECT_EQ(two.tp, 2u);
  EXPECT_EQ(two.fp, 1u);
  EXPECT_EQ(two.fn, 1u);
  EXPECT_DOUBLE_EQ(two.precision, 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(two.recall, 2.0 / 3.0);
  EXPECT_NEAR(two.f_beta, 2.0 / 3.0, 1e-12);
}

TEST(ScorerProperty, AgreesWithSetOracle) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = gen::below(rng, 10);
    const EditSet hyp = gen::edit_set(rng, n, 4, 3);
    std::vector<EditSet> refs;
    const std::size_t nrefs = 1 + gen::below(rng, 3);
    for (std::size_t r = 0; r < nrefs; ++r) {
      refs.push_back(gen::below(rng, 3) == 0 ? hyp : gen::edit_set(rng, n, 4, 3));
    }
    const SentenceScore got = score_sentence(hyp, refs);
    const auto [want, idx] = oracle::best_reference(hyp, refs);
    EXPECT_EQ(got.reference, idx);
    EXPECT_EQ(got.counts, (EditCounts{want.tp, want.fp, want.fn}));
    for (const EditSet& ref : refs) {
      const auto fixed = oracle::set_counts(hyp, ref);
      EXPECT_GE(oracle::f_half(want), oracle::f_half(fixed));
    }
  }
}

TEST(ScoreM2Test, UsesFirstHypothesisAnnotatorAndAllReferences) {
  const Sentence src = Sentence::from_utf8("abcdef");
  const M2Entry hyp{src, {{0, EditSet(6, {e1, e3})}}};
  const M2Entry ref{src, {{0, EditSet(6, {e2})}, {1, EditSet(6, {e1, e3})}}};
  const ScoreReport r = score_m2({hyp}, {ref});
  EXPECT_EQ(r.tp, 2u);
  EXPECT_EQ(r.fp, 0u);
  EXPECT_EQ(r.fn, 0u);
  EXPECT_THROW(score_m2({hyp}, {}), MismatchError);
  EXPECT_THROW(score_m2({hyp}, {M2Entry{Sentence::from_utf8("abcdeg"), ref.annotations}}),
               MismatchError);
  EXPECT_THROW(score_m2({hyp}, {M2Entry{src, {}}}), ConfigError);
}

TEST(ReportTest, JsonFieldsRoundedToSixPlaces) {
  const ScoreReport r = aggregate(std::vector<EditCounts>{{2, 1, 0}});
  const auto json = nlohmann::json::parse(report_json(r));
  EXPECT_EQ(json["tp"], 2);
  EXPECT_EQ(json["fp"], 1);
  EXPECT_EQ(json["fn"], 0);
  EXPECT_DOUBLE_EQ(json["precision"].get<double>(), 0.666667);
  EXPECT_DOUBLE_EQ(json["recall"].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(json["f_beta"].get<double>(), 0.714286);
  EXPECT_TRUE(report_json(r).starts_with(R"({"tp":2,"fp":1,"fn":0,"precision":)"));
  EXPECT_NE(report_table(r).find("0.6667"), std::string::npos);
}

}  // namespace
}  // namespace ocgec
