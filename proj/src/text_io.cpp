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

#include "ocgec/text_io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "json.hpp"
#include "ocgec/error.hpp"

namespace ocgec {
namespace {

Sentence sentence_at(std::string_view bytes, std::size_t line_no) {
  try {
    return Sentence::from_utf8(bytes);
  } catch (const FormatError& e) {
    throw ParseError(line_no, e.what());
  }
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw FormatError("write failed for " + path.string());
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  return lines;
}

std::vector<Sentence> parse_sentences(std::string_view text) {
  std::vector<Sentence> out;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    out.push_back(sentence_at(line, ++line_no));
  }
  return out;
}

std::string write_sentences(const std::vector<Sentence>& sentences) {
  std::string out;
  for (const Sentence& s : sentences) {
    const std::string text = s.to_utf8();
    if (text.find_first_of("\r\n") != std::string::npos) {
      throw FormatError("sentence contains a line break");
    }
    out += text;
    out.push_back('\n');
  }
  return out;
}

void check_tsv_field(const Sentence& s) {
  for (char32_t c : s.units()) {
    if (c == U'\t' || c == U'\n' || c == U'\r') {
      throw FormatError("sentence contains a tab or line break");
    }
  }
}

std::vector<ParallelExample> parse_parallel_tsv(std::string_view text) {
  std::vector<ParallelExample> corpus;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    ParallelExample ex;
    std::size_t pos = 0;
    bool first = true;
    while (true) {
      const std::size_t tab = line.find('\t', pos);
      const std::string_view field =
          line.substr(pos, tab == std::string_view::npos ? line.npos : tab - pos);
      if (first) {
        ex.source = sentence_at(field, line_no);
        first = false;
      } else {
        ex.references.push_back(sentence_at(field, line_no));
      }
      if (tab == std::string_view::npos) break;
      pos = tab + 1;
    }
    if (ex.references.empty()) {
      throw ParseError(line_no, "expected 'source<TAB>reference'");
    }
    corpus.push_back(std::move(ex));
  }
  return corpus;
}

std::string write_parallel_tsv(const std::vector<ParallelExample>& corpus) {
  std::string out;
  for (const ParallelExample& ex : corpus) {
    check_tsv_field(ex.source);
    out += ex.source.to_utf8();
    for (const Sentence& ref : ex.references) {
      check_tsv_field(ref);
      out.push_back('\t');
      out += ref.to_utf8();
    }
    out.push_back('\n');
  }
  return out;
}

std::vector<CandidateTriple> parse_triples_jsonl(std::string_view text) {
  std::vector<CandidateTriple> triples;
  std::size_t line_no = 0;
  for (std::string_view line : split_lines(text)) {
    ++line_no;
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, e.what());
    }
    auto field = [&](const char* key) {
      if (!obj.is_object() || !obj.contains(key) || !obj[key].is_string()) {
        throw ParseError(line_no, std::string("missing string field '") + key + "'");
      }
      return sentence_at(obj[key].get<std::string>(), line_no);
    };
    triples.push_back({field("src"), field("candidate"), field("gold")});
  }
  return triples;
}

std::string write_triples_jsonl(const std::vector<CandidateTriple>& triples) {
  std::string out;
  for (const CandidateTriple& t : triples) {
    nlohmann::ordered_json obj;
    obj["src"] = t.source.to_utf8();
    obj["candidate"] = t.candidate.to_utf8();
    obj["gold"] = t.gold.to_utf8();
    out += obj.dump();
    out.push_back('\n');
  }
  return out;
}

}  // namespace ocgec
