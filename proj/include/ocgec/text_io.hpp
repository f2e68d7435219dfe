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

// File-level plumbing shared by the pipeline stages: whole-file I/O, line
// splitting, the parallel TSV corpus and the candidate-triple JSON Lines.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ocgec/text_core.hpp"

namespace ocgec {

struct ParallelExample {
  Sentence source;
  std::vector<Sentence> references;  // never empty

  friend bool operator==(const ParallelExample&, const ParallelExample&) = default;
};

struct CandidateTriple {
  Sentence source;
  Sentence candidate;
  Sentence gold;

  friend bool operator==(const CandidateTriple&, const CandidateTriple&) = default;
};

// Throws FormatError naming the path on failure.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

// Splits on '\n'; a trailing newline does not start an extra line and a
// trailing '\r' on each line is dropped.
std::vector<std::string_view> split_lines(std::string_view text);

std::vector<Sentence> parse_sentences(std::string_view text);
std::string write_sentences(const std::vector<Sentence>& sentences);

// `source TAB ref1 [TAB ref2 ...]`, one example per line. Throws ParseError
// for lines without a reference.
std::vector<ParallelExample> parse_parallel_tsv(std::string_view text);
std::string write_parallel_tsv(const std::vector<ParallelExample>& corpus);

// One `{"src":…,"candidate":…,"gold":…}` object per line.
std::vector<CandidateTriple> parse_triples_jsonl(std::string_view text);
std::string write_triples_jsonl(const std::vector<CandidateTriple>& triples);

// Throws FormatError if `s` cannot sit in one TSV field.
void check_tsv_field(const Sentence& s);

}  // namespace ocgec
