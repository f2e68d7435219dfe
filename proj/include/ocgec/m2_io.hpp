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

// MaxMatch (M2) annotation files in character mode: the `S` line lists the
// source one character per space-separated token, and each `A` line is
//
//   A <start> <end>|||<type>|||<correction>|||REQUIRED|||-NONE-|||<annotator>
//
// with "-NONE-" standing for an empty correction and `A -1 -1|||noop|||...`
// marking an annotator who made no edits. Blocks are separated by a blank
// line.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ocgec/text_core.hpp"

namespace ocgec {

using AnnotatorId = unsigned;

struct M2Entry {
  Sentence source;
  std::map<AnnotatorId, EditSet> annotations;

  friend bool operator==(const M2Entry&, const M2Entry&) = default;
};

// Throws ParseError for malformed lines, InvalidEditError for spans outside
// the source, and InvalidEditSetError for overlapping edits of one
// annotator. Messages carry the 1-based line number.
std::vector<M2Entry> parse_m2(std::string_view text);

// Annotators are written in ascending id order; an empty edit set becomes a
// noop line. Throws FormatError for content the format cannot carry: ASCII
// whitespace inside a sentence or correction, or a type label containing
// '|' or whitespace.
std::string write_m2(const std::vector<M2Entry>& entries);

}  // namespace ocgec
