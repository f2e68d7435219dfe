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

#include "ocgec/training_format.hpp"

#include <array>

#include "ocgec/error.hpp"
#include "ocgec/utf8.hpp"

namespace ocgec {
namespace {

constexpr std::array<std::string_view, 3> kMarkers = {kSosMarker, kCatMarker,
                                                      kSepMarker};

void check_content(const std::string& text, std::string_view role) {
  for (std::string_view marker : kMarkers) {
    if (text.find(marker) != std::string::npos) {
      throw FormatError(std::string(role) + " contains the reserved marker " +
                        std::string(marker));
    }
  }
  if (text.find_first_of("\r\n") != std::string::npos) {
    throw FormatError(std::string(role) + " contains a line break");
  }
}

}  // namespace

std::string serialize_training_example(const Sentence& src,
                                       const std::optional<Sentence>& candidate,
                                       const Sentence& tgt) {
  const std::string src_text = src.to_utf8();
  const std::string tgt_text = tgt.to_utf8();
  check_content(src_text, "source");
  check_content(tgt_text, "target");
  std::string out(kSosMarker);
  out += src_text;
  if (candidate) {
    const std::string cand_text = candidate->to_utf8();
    check_content(cand_text, "candidate");
    out += kCatMarker;
    out += cand_text;
  }
  out += kSepMarker;
  out += tgt_text;
  return out;
}

std::vector<std::u32string> tokenize_serialized(std::string_view serialized) {
  std::vector<std::u32string> tokens;
  std::size_t literal_start = 0;
  auto flush = [&](std::size_t until) {
    for (char32_t c : utf8::decode(serialized.substr(literal_start, until - literal_start))) {
      tokens.emplace_back(1, c);
    }
  };
  std::size_t i = 0;
  while (i < serialized.size()) {
    bool marker = false;
    if (serialized[i] == '<') {
      for (std::string_view m : kMarkers) {
        if (serialized.substr(i, m.size()) == m) {
          flush(i);
          tokens.push_back(utf8::decode(m));
          i += m.size();
          literal_start = i;
          marker = true;
          break;
        }
      }
    }
    if (!marker) ++i;
  }
  flush(serialized.size());
  return tokens;
}

TokenSpan target_span(std::string_view serialized) {
  const std::vector<std::u32string> tokens = tokenize_serialized(serialized);
  const std::u32string sep = utf8::decode(kSepMarker);
  std::optional<std::size_t> sep_at;
  for (std::size_t k = 0; k < tokens.size(); ++k) {
    if (tokens[k] != sep) continue;
    if (sep_at) throw FormatError("serialized example has more than one <sep>");
    sep_at = k;
  }
  if (!sep_at) throw FormatError("serialized example has no <sep>");
  return TokenSpan{*sep_at + 1, tokens.size()};
}

Sentence decode_span(std::string_view serialized, TokenSpan span) {
  const std::vector<std::u32string> tokens = tokenize_serialized(serialized);
  if (span.begin > span.end || span.end > tokens.size()) {
    throw FormatError("token span out of range");
  }
  std::u32string units;
  for (std::size_t k = span.begin; k < span.end; ++k) units += tokens[k];
  return Sentence(std::move(units));
}

}  // namespace ocgec
