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

#include "ocgec/text_core.hpp"

namespace ocgec {

// True when the two edits cannot both be applied unambiguously: their
// half-open spans overlap (an insertion strictly inside a span counts), or
// both are insertions at the same position. Touching spans do not conflict.
bool edits_conflict(const Edit& a, const Edit& b);

// Union of `gold` with every candidate edit that conflicts with no gold
// edit. Gold edits are kept verbatim, so a candidate edit identical to a
// gold edit is kept once. Throws MismatchError when the sets were built
// for different source lengths.
EditSet merge_edit_sets(const EditSet& candidate, const EditSet& gold);

// Training candidate for the rewriter: the system's edits with every gold
// edit forced in, applied to `src`.
Sentence build_candidate(const Sentence& src, const Sentence& system_hyp,
                         const Sentence& gold);

}  // namespace ocgec
