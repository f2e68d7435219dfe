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

// Perplexity-based filters that strip likely over-corrections from a GEC
// system's output. Every filter returns the source with some subset of the
// system's edits applied; ties always favour keeping the source.

#include <cstddef>
#include <string_view>
#include <vector>

#include "ocgec/lm_scoring.hpp"
#include "ocgec/text_core.hpp"

namespace ocgec {

enum class Granularity { kSentence, kEdit, kCombination };

// Throws ConfigError for anything but "sentence", "edit", "combination".
Granularity parse_granularity(std::string_view name);
std::string_view granularity_name(Granularity g);

struct FilterOptions {
  // Edit lists up to this size are searched exhaustively (2^m scorings).
  std::size_t max_exhaustive = 12;
  std::size_t beam_width = 8;
};

struct FilterResult {
  Sentence output;
  EditSet proposed;               // extract_edits(src, hyp)
  std::vector<std::size_t> kept;  // ascending positions into proposed
  double perplexity = 0.0;        // of output
  bool beam_search_used = false;
};

// hyp if PPL(hyp) < PPL(src), else src.
FilterResult filter_sentence_level(const Sentence& src, const Sentence& hyp,
                                   const LMScorer& scorer);

// Keeps each edit that on its own lowers the source's PPL.
FilterResult filter_edit_level(const Sentence& src, const Sentence& hyp,
                               const LMScorer& scorer);

// Lowest-PPL subset of the edits. Ties go to fewer edits, then to the
// lexicographically smaller sorted position tuple. Above max_exhaustive
// edits a position-ordered beam search is used and its winner is compared
// with src and hyp.
FilterResult filter_edit_combination(const Sentence& src, const Sentence& hyp,
                                     const LMScorer& scorer,
                                     const FilterOptions& options = {});

FilterResult apply_filter(Granularity granularity, const Sentence& src,
                          const Sentence& hyp, const LMScorer& scorer,
                          const FilterOptions& options = {});

}  // namespace ocgec
