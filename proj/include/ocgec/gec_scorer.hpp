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

#pragma once

// Span-level precision / recall / F-beta for character edits, with
// multi-reference sentences and micro-averaged corpus totals.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ocgec/m2_io.hpp"
#include "ocgec/text_core.hpp"

namespace ocgec {

struct EditCounts {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;

  friend bool operator==(const EditCounts&, const EditCounts&) = default;
};

struct SentenceScore {
  EditCounts counts;
  std::size_t reference = 0;  // index of the chosen reference
};

struct ScoreReport {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f_beta = 0.0;
  double beta = 0.5;
};

// (1 + b^2) P R / (b^2 P + R), or 0 when the denominator is 0. Throws
// DomainError unless 0 <= p, r <= 1 and beta > 0.
double f_beta(double p, double r, double beta);

double precision_of(const EditCounts& c);
double recall_of(const EditCounts& c);

// Edits match on (start, end, replacement). Picks the reference with the
// best sentence F-beta, then more true positives, then fewer false
// negatives, then the lower index. Throws ConfigError if refs is empty.
SentenceScore score_sentence(const EditSet& hyp, std::span<const EditSet> refs,
                             double beta = 0.5);

ScoreReport aggregate(std::span<const EditCounts> per_sentence, double beta = 0.5);

// Scores a hypothesis M2 (its lowest annotator id per entry; none means no
// edits) against a reference M2 whose annotators are alternative
// references. Throws MismatchError if entry counts or sources differ.
ScoreReport score_m2(const std::vector<M2Entry>& hyp, const std::vector<M2Entry>& ref,
                     double beta = 0.5);

// `{"tp":…,"fp":…,"fn":…,"precision":…,"recall":…,"f_beta":…,"beta":…}`
// with fractions rounded to 6 decimal places.
std::string report_json(const ScoreReport& report);
std::string report_table(const ScoreReport& report);

}  // namespace ocgec
