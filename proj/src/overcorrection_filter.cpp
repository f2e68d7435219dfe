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

#include <algorithm>
#include <string>

#include "ocgec/error.hpp"

namespace ocgec {
namespace {

struct Scored {
  std::vector<std::size_t> kept;
  double ppl;
};

// Strict weak order implementing the tie rules.
bool better(const Scored& a, const Scored& b) {
  if (a.ppl != b.ppl) return a.ppl < b.ppl;
  if (a.kept.size() != b.kept.size()) return a.kept.size() < b.kept.size();
  return std::lexicographical_compare(a.kept.begin(), a.kept.end(), b.kept.begin(),
                                      b.kept.end());
}

std::vector<std::size_t> all_positions(std::size_t m) {
  std::vector<std::size_t> v(m);
  for (std::size_t i = 0; i < m; ++i) v[i] = i;
  return v;
}

FilterResult finish(const Sentence& src, EditSet proposed, Scored best, bool beam) {
  FilterResult r;
  r.output = apply_edits(src, proposed.subset(best.kept));
  r.proposed = std::move(proposed);
  r.kept = std::move(best.kept);
  r.perplexity = best.ppl;
  r.beam_search_used = beam;
  return r;
}

constexpr std::size_t kMaxEnumerable = 30;

}  // namespace

Granularity parse_granularity(std::string_view name) {
  if (name == "sentence") return Granularity::kSentence;
  if (name == "edit") return Granularity::kEdit;
  if (name == "combination") return Granularity::kCombination;
  throw ConfigError("unknown filter granularity '" + std::string(name) +
                    "' (expected sentence, edit or combination)");
}

std::string_view granularity_name(Granularity g) {
  switch (g) {
    case Granularity::kSentence:
      return "sentence";
    case Granularity::kEdit:
      return "edit";
    case Granularity::kCombination:
      return "combination";
  }
  return "";
}

FilterResult filter_sentence_level(const Sentence& src, const Sentence& hyp,
                                   const LMScorer& scorer) {
  EditSet proposed = extract_edits(src, hyp);
  const double src_ppl = sentence_perplexity(scorer, src);
  if (proposed.empty()) return finish(src, std::move(proposed), {{}, src_ppl}, false);
  const double hyp_ppl = sentence_perplexity(scorer, hyp);
  if (hyp_ppl < src_ppl) {
    const std::size_t m = proposed.size();
    return finish(src, std::move(proposed), {all_positions(m), hyp_ppl}, false);
  }
  return finish(src, std::move(proposed), {{}, src_ppl}, false);
}

FilterResult filter_edit_level(const Sentence& src, const Sentence& hyp,
                               const LMScorer& scorer) {
  EditSet proposed = extract_edits(src, hyp);
  const double src_ppl = sentence_perplexity(scorer, src);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < proposed.size(); ++i) {
    const std::size_t one[] = {i};
    if (sentence_perplexity(scorer, apply_edits(src, proposed.subset(one))) < src_ppl) {
      kept.push_back(i);
    }
  }
  const double ppl = kept.empty()
                         ? src_ppl
                         : sentence_perplexity(scorer, apply_edits(src, proposed.subset(kept)));
  return finish(src, std::move(proposed), {std::move(kept), ppl}, false);
}

FilterResult filter_edit_combination(const Sentence& src, const Sentence& hyp,
                                     const LMScorer& scorer,
                                     const FilterOptions& options) {
  if (options.beam_width < 1) throw ConfigError("beam width must be at least 1");
  EditSet proposed = extract_edits(src, hyp);
  const std::size_t m = proposed.size();
  auto ppl_of = [&](const std::vector<std::size_t>& kept) {
    return sentence_perplexity(scorer, apply_edits(src, proposed.subset(kept)));
  };

  if (m <= options.max_exhaustive && m <= kMaxEnumerable) {
    Scored best{{}, ppl_of({})};
    std::vector<std::size_t> kept;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      kept.clear();
      for (std::size_t i = 0; i < m; ++i) {
        if (mask >> i & 1) kept.push_back(i);
      }
      Scored cand{kept, ppl_of(kept)};
      if (better(cand, best)) best = std::move(cand);
    }
    return finish(src, std::move(proposed), std::move(best), false);
  }

  const Scored source_only{{}, ppl_of({})};
  std::vector<Scored> beam{source_only};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Scored> next;
    next.reserve(beam.size() * 2);
    for (const Scored& s : beam) {
      next.push_back(s);
      Scored with = s;
      with.kept.push_back(i);
      with.ppl = ppl_of(with.kept);
      next.push_back(std::move(with));
    }
    std::sort(next.begin(), next.end(), better);
    if (next.size() > options.beam_width) next.resize(options.beam_width);
    beam = std::move(next);
  }
  Scored best = beam.front();
  for (Scored alt : {source_only, Scored{all_positions(m), ppl_of(all_positions(m))}}) {
    if (better(alt, best)) best = std::move(alt);
  }
  return finish(src, std::move(proposed), std::move(best), true);
}

FilterResult apply_filter(Granularity granularity, const Sentence& src,
                          const Sentence& hyp, const LMScorer& scorer,
                          const FilterOptions& options) {
  switch (granularity) {
    case Granularity::kSentence:
      return filter_sentence_level(src, hyp, scorer);
    case Granularity::kEdit:
      return filter_edit_level(src, hyp, scorer);
    case Granularity::kCombination:
      return filter_edit_combination(src, hyp, scorer, options);
  }
  throw ConfigError("unknown filter granularity");
}

}  // namespace ocgec
