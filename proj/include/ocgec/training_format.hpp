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

// Causal-LM training lines for the rewriter:
//
//   <sos> source <cat> candidate <sep> target     (with a candidate)
//   <sos> source <sep> target                     (plain correction)
//
// written without spaces. Only the target part carries loss; target_span
// locates it in token units, where each marker is one token and every
// other Unicode scalar value is one token.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocgec/text_core.hpp"

namespace ocgec {

inline constexpr std::string_view kSosMarker = "<sos>";
inline constexpr std::string_view kCatMarker = "<cat>";
inline constexpr std::string_view kSepMarker = "<sep>";

// Throws FormatError if a sentence contains a marker string or a newline.
std::string serialize_training_example(const Sentence& src,
                                       const std::optional<Sentence>& candidate,
                                       const Sentence& tgt);

std::vector<std::u32string> tokenize_serialized(std::string_view serialized);

struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
};

// Token range after the single <sep> marker; end is the token count.
// Throws FormatError unless exactly one <sep> is present.
TokenSpan target_span(std::string_view serialized);

// Concatenates the tokens in `span` back into a sentence.
Sentence decode_span(std::string_view serialized, TokenSpan span);

}  // namespace ocgec
