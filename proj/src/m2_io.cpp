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

#include "ocgec/m2_io.hpp"

#include <charconv>
#include <optional>

#include "ocgec/error.hpp"
#include "ocgec/utf8.hpp"

namespace ocgec {
namespace {

constexpr std::string_view kSep = "|||";
constexpr std::string_view kNone = "-NONE-";

bool is_ascii_space(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\v' ||
         c == U'\f';
}

std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long long> parse_int(std::string_view s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

std::u32string decode_at(std::string_view bytes, std::size_t line_no) {
  try {
    return utf8::decode(bytes);
  } catch (const FormatError& e) {
    throw ParseError(line_no, e.what());
  }
}

Sentence parse_source(std::string_view rest, std::size_t line_no) {
  std::u32string units;
  for (std::string_view tok : split_tokens(rest)) {
    std::u32string u = decode_at(tok, line_no);
    if (u.size() != 1) {
      throw ParseError(line_no, "source token '" + std::string(tok) +
                                    "' is not a single character");
    }
    units.push_back(u[0]);
  }
  return Sentence(std::move(units));
}

struct Block {
  std::size_t first_line = 0;
  Sentence source;
  std::map<AnnotatorId, std::vector<Edit>> edits;
};

// Fields: span and type from the left, the three trailing fields from the
// right, so a correction made of '|' characters still splits correctly.
void parse_annotation(std::string_view line, std::size_t line_no,
                      Block& block) {
  std::string_view rest = line.substr(2);
  const std::size_t span_end = rest.find(kSep);
  if (span_end == std::string_view::npos) {
    throw ParseError(line_no, "expected 6 '|||'-separated fields");
  }
  const std::string_view span_field = rest.substr(0, span_end);
  rest.remove_prefix(span_end + kSep.size());
  const std::size_t type_end = rest.find(kSep);
  if (type_end == std::string_view::npos) {
    throw ParseError(line_no, "expected 6 '|||'-separated fields");
  }
  const std::string_view type = rest.substr(0, type_end);
  rest.remove_prefix(type_end + kSep.size());

  std::string_view tail[3];
  for (int k = 2; k >= 0; --k) {
    const std::size_t p = rest.rfind(kSep);
    if (p == std::string_view::npos) {
      throw ParseError(line_no, "expected 6 '|||'-separated fields");
    }
    tail[k] = rest.substr(p + kSep.size());
    rest = rest.substr(0, p);
  }
  const std::string_view correction = rest;

  const auto annotator = parse_int(tail[2]);
  if (!annotator || *annotator < 0 ||
      *annotator > static_cast<long long>(~AnnotatorId{0})) {
    throw ParseError(line_no, "bad annotator id '" + std::string(tail[2]) + "'");
  }
  const auto id = static_cast<AnnotatorId>(*annotator);

  const auto bounds = split_tokens(span_field);
  if (bounds.size() != 2) {
    throw ParseError(line_no, "expected '<start> <end>' span");
  }
  const auto start = parse_int(bounds[0]);
  const auto end = parse_int(bounds[1]);
  if (!start || !end) throw ParseError(line_no, "non-integer span bound");

  if (*start == -1 && *end == -1) {
    block.edits[id];
    return;
  }
  if (*start < 0 || *end < 0) throw ParseError(line_no, "negative span bound");
  if (*start > *end || static_cast<std::size_t>(*end) > block.source.size()) {
    throw InvalidEditError("line " + std::to_string(line_no) + ": span [" +
                           std::to_string(*start) + "," +
                           std::to_string(*end) +
                           ") out of bounds for source length " +
                           std::to_string(block.source.size()));
  }

  Edit e;
  e.start = static_cast<std::size_t>(*start);
  e.end = static_cast<std::size_t>(*end);
  e.type = std::string(type);
  if (correction != kNone) {
    for (std::string_view tok : split_tokens(correction)) {
      e.replacement += decode_at(tok, line_no);
    }
  }
  if (e.is_insertion() && e.replacement.empty()) {
    throw InvalidEditError("line " + std::to_string(line_no) + ": null edit");
  }
  block.edits[id].push_back(std::move(e));
}

M2Entry finish(Block& block) {
  M2Entry entry;
  entry.source = std::move(block.source);
  for (auto& [id, edits] : block.edits) {
    try {
      entry.annotations.emplace(id,
                                EditSet(entry.source.size(), std::move(edits)));
    } catch (const InvalidEditSetError& e) {
      throw InvalidEditSetError("block at line " +
                                std::to_string(block.first_line) +
                                ", annotator " + std::to_string(id) + ": " +
                                e.what());
    }
  }
  return entry;
}

void append_units(std::string& out, std::u32string_view units,
                  std::string_view what) {
  bool first = true;
  for (char32_t c : units) {
    if (is_ascii_space(c)) {
      throw FormatError("M2 cannot represent whitespace inside a " +
                        std::string(what));
    }
    if (!first) out.push_back(' ');
    utf8::append(out, c);
    first = false;
  }
}

}  // namespace

std::vector<M2Entry> parse_m2(std::string_view text) {
  std::vector<M2Entry> entries;
  std::optional<Block> block;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (is_blank(line)) {
      if (block) entries.push_back(finish(*block));
      block.reset();
      continue;
    }
    if (line[0] == 'S' && (line.size() == 1 || line[1] == ' ')) {
      if (block) entries.push_back(finish(*block));
      block.emplace();
      block->first_line = line_no;
      block->source = parse_source(line.substr(1), line_no);
      continue;
    }
    if (line.size() >= 2 && line[0] == 'A' && line[1] == ' ') {
      if (!block) throw ParseError(line_no, "annotation line before 'S' line");
      parse_annotation(line, line_no, *block);
      continue;
    }
    throw ParseError(line_no, "expected an 'S' or 'A' line");
  }
  if (block) entries.push_back(finish(*block));
  return entries;
}

std::string write_m2(const std::vector<M2Entry>& entries) {
  std::string out;
  for (const M2Entry& entry : entries) {
    out += "S";
    if (!entry.source.empty()) {
      out.push_back(' ');
      append_units(out, entry.source.view(), "sentence");
    }
    out.push_back('\n');
    for (const auto& [id, edits] : entry.annotations) {
      const std::string ann = std::to_string(id);
      if (edits.empty()) {
        out += "A -1 -1|||noop|||-NONE-|||REQUIRED|||-NONE-|||" + ann + "\n";
        continue;
      }
      for (const Edit& e : edits) {
        if (e.type.empty() ||
            e.type.find_first_of("| \t\r\n") != std::string::npos) {
          throw FormatError("M2 type label '" + e.type + "' is not writable");
        }
        out += "A " + std::to_string(e.start) + " " + std::to_string(e.end);
        out += kSep;
        out += e.type;
        out += kSep;
        if (e.replacement.empty()) {
          out += kNone;
        } else {
          append_units(out, e.replacement, "correction");
        }
        out += "|||REQUIRED|||-NONE-|||" + ann + "\n";
      }
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace ocgec
