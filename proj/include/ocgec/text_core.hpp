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

// Character-level text model: sentences as Unicode scalar sequences, span
// edits anchored to source indices, and Levenshtein-based edit extraction.

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ocgec {

class Sentence {
 public:
  Sentence() = default;
  // Throws FormatError if any unit is not a Unicode scalar value.
  explicit Sentence(std::u32string units);

  static Sentence from_utf8(std::string_view text);
  std::string to_utf8() const;

  const std::u32string& units() const { return units_; }
  std::u32string_view view() const { return units_; }
  std::size_t size() const { return units_.size(); }
  bool empty() const { return units_.empty(); }
  char32_t operator[](std::size_t i) const { return units_[i]; }

  friend bool operator==(const Sentence&, const Sentence&) = default;
  friend auto operator<=>(const Sentence&, const Sentence&) = default;

 private:
  std::u32string units_;
};

// Replaces source units [start, end) with `replacement`. An insertion has
// start == end. `type` is the M2 error-type label; it is carried through
// parse/write but plays no part in matching.
struct Edit {
  std::size_t start = 0;
  std::size_t end = 0;
  std::u32string replacement;
  std::string type = "R";

  bool is_insertion() const { return start == end; }
  std::size_t span_length() const { return end - start; }

  friend bool operator==(const Edit&, const Edit&) = default;
};

// True when both edits make the same change: equal span and replacement.
inline bool same_change(const Edit& a, const Edit& b) {
  return a.start == b.start && a.end == b.end &&
         a.replacement == b.replacement;
}

// Sorted, pairwise non-overlapping edits validated against a source length.
class EditSet {
 public:
  EditSet() = default;
  explicit EditSet(std::size_t source_length) : source_length_(source_length) {}

  // Sorts by (start, end) and validates. Throws InvalidEditError for a span
  // outside [0, source_length] or a null edit, InvalidEditSetError for
  // overlapping spans or two insertions at one position.
  EditSet(std::size_t source_length, std::vector<Edit> edits);

  std::size_t source_length() const { return source_length_; }
  const std::vector<Edit>& edits() const { return edits_; }
  std::size_t size() const { return edits_.size(); }
  bool empty() const { return edits_.empty(); }
  const Edit& operator[](std::size_t i) const { return edits_[i]; }
  auto begin() const { return edits_.begin(); }
  auto end() const { return edits_.end(); }

  // Subset by positions into edits(); positions need not be sorted.
  EditSet subset(std::span<const std::size_t> positions) const;

  friend bool operator==(const EditSet&, const EditSet&) = default;

 private:
  std::size_t source_length_ = 0;
  std::vector<Edit> edits_;
};

// Minimum-cost character alignment of `src` to `hyp` (unit costs), coalesced
// into span edits. Backtrace prefers the diagonal, then deletion, then
// insertion, so the result is deterministic.
EditSet extract_edits(const Sentence& src, const Sentence& hyp);

// Applies `edits` against the original indices of `src`. Throws
// InvalidEditError if the set was built for a different source length.
Sentence apply_edits(const Sentence& src, const EditSet& edits);

// Validating overload for unchecked edit lists.
Sentence apply_edits(const Sentence& src, std::span<const Edit> edits);

}  // namespace ocgec
