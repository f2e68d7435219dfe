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

#include <string>
#include <vector>

#include "ocgec/error.hpp"

namespace ocgec {

bool edits_conflict(const Edit& a, const Edit& b) {
  if (a.is_insertion() && b.is_insertion()) return a.start == b.start;
  return a.start < b.end && b.start < a.end;
}

EditSet merge_edit_sets(const EditSet& candidate, const EditSet& gold) {
  if (candidate.source_length() != gold.source_length()) {
    throw MismatchError("candidate edits are for source length " +
                        std::to_string(candidate.source_length()) +
                        " but gold edits are for length " +
                        std::to_string(gold.source_length()));
  }
  std::vector<Edit> merged(gold.begin(), gold.end());
  // Both inputs are sorted, so a sweep over gold suffices.
  std::size_t g = 0;
  for (const Edit& c : candidate) {
    while (g < gold.size() && gold[g].end < c.start) ++g;
    bool conflict = false;
    for (std::size_t k = g; k < gold.size() && gold[k].start <= c.end; ++k) {
      if (edits_conflict(c, gold[k])) {
        conflict = true;
        break;
      }
    }
    if (!conflict) merged.push_back(c);
  }
  return EditSet(gold.source_length(), std::move(merged));
}

Sentence build_candidate(const Sentence& src, const Sentence& system_hyp,
                         const Sentence& gold) {
  return apply_edits(src, merge_edit_sets(extract_edits(src, system_hyp),
                                          extract_edits(src, gold)));
}

}  // namespace ocgec
