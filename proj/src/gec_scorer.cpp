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

#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "ocgec/error.hpp"

namespace ocgec {
namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

EditCounts compare(const EditSet& hyp, const EditSet& ref) {
  EditCounts c;
  for (const Edit& h : hyp) {
    bool found = false;
    for (const Edit& r : ref) {
      if (same_change(h, r)) {
        found = true;
        break;
      }
    }
    found ? ++c.tp : ++c.fp;
  }
  c.fn = ref.size() - c.tp;
  return c;
}

double round6(double v) { return std::round(v * 1e6) / 1e6; }

}  // namespace

double f_beta(double p, double r, double beta) {
  if (!(p >= 0.0 && p <= 1.0) || !(r >= 0.0 && r <= 1.0)) {
    throw DomainError("precision and recall must lie in [0, 1]");
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) throw DomainError("beta must be positive");
  const double b2 = beta * beta;
  const double den = b2 * p + r;
  return den == 0.0 ? 0.0 : (1.0 + b2) * p * r / den;
}

double precision_of(const EditCounts& c) { return ratio(c.tp, c.tp + c.fp); }
double recall_of(const EditCounts& c) { return ratio(c.tp, c.tp + c.fn); }

SentenceScore score_sentence(const EditSet& hyp, std::span<const EditSet> refs,
                             double beta) {
  if (refs.empty()) throw ConfigError("a sentence needs at least one reference");
  SentenceScore best;
  double best_f = -1.0;
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (refs[i].source_length() != hyp.source_length()) {
      throw MismatchError("reference " + std::to_string(i) +
                          " is for a different source length");
    }
    const EditCounts c = compare(hyp, refs[i]);
    const double f = f_beta(precision_of(c), recall_of(c), beta);
    const bool take = f > best_f ||
                      (f == best_f && (c.tp > best.counts.tp ||
                                       (c.tp == best.counts.tp && c.fn < best.counts.fn)));
    if (take) {
      best = {c, i};
      best_f = f;
    }
  }
  return best;
}

ScoreReport aggregate(std::span<const EditCounts> per_sentence, double beta) {
  ScoreReport r;
  r.beta = beta;
  for (const EditCounts& c : per_sentence) {
    r.tp += c.tp;
    r.fp += c.fp;
    r.fn += c.fn;
  }
  r.precision = ratio(r.tp, r.tp + r.fp);
  r.recall = ratio(r.tp, r.tp + r.fn);
  r.f_beta = f_beta(r.precision, r.recall, beta);
  return r;
}

ScoreReport score_m2(const std::vector<M2Entry>& hyp, const std::vector<M2Entry>& ref,
                     double beta) {
  if (hyp.size() != ref.size()) {
    throw MismatchError("hypothesis has " + std::to_string(hyp.size()) +
                        " entries but reference has " + std::to_string(ref.size()));
  }
  std::vector<EditCounts> counts;
  counts.reserve(hyp.size());
  for (std::size_t i = 0; i < hyp.size(); ++i) {
    if (hyp[i].source != ref[i].source) {
      throw MismatchError("entry " + std::to_string(i + 1) +
                          ": hypothesis and reference sources differ");
    }
    const EditSet hyp_edits = hyp[i].annotations.empty()
                                  ? EditSet(hyp[i].source.size())
                                  : hyp[i].annotations.begin()->second;
    std::vector<EditSet> refs;
    for (const auto& [id, edits] : ref[i].annotations) refs.push_back(edits);
    if (refs.empty()) {
      throw ConfigError("entry " + std::to_string(i + 1) + " has no reference annotation");
    }
    counts.push_back(score_sentence(hyp_edits, refs, beta).counts);
  }
  return aggregate(counts, beta);
}

std::string report_json(const ScoreReport& report) {
  nlohmann::ordered_json obj;
  obj["tp"] = report.tp;
  obj["fp"] = report.fp;
  obj["fn"] = report.fn;
  obj["precision"] = round6(report.precision);
  obj["recall"] = round6(report.recall);
  obj["f_beta"] = round6(report.f_beta);
  obj["beta"] = report.beta;
  return obj.dump();
}

std::string report_table(const ScoreReport& report) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%-8s%-8s%-8s%-10s%-10s%s\n%-8zu%-8zu%-8zu%-10.4f%-10.4f%.4f\n", "TP",
                "FP", "FN", "Prec", "Rec", ("F" + std::to_string(report.beta).substr(0, 3)).c_str(),
                report.tp, report.fp, report.fn, report.precision, report.recall,
                report.f_beta);
  return buf;
}

}  // namespace ocgec
