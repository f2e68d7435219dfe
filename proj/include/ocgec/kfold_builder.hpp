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

// K-fold cross inference: every training sentence gets a system output from
// a corrector that never saw it, then gold edits are merged in to form the
// rewriter's candidate sentence.
//
// The corrector is an external program driven through two command
// templates run by /bin/sh:
//
//   train:  {train_file} {model_dir}
//           train_file is UTF-8 TSV, `source TAB target`, one pair per line
//   infer:  {model_dir} {input_file} {output_file}
//           one source per input line; one corrected sentence per output
//           line, same count and order
//
// Exit status 0 means success. Placeholders are replaced with shell-quoted
// paths.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ocgec/text_io.hpp"

namespace ocgec {

struct CorrectorHandle {
  std::string train_command;
  std::string infer_command;
  // Per-fold scratch and model directories are created beneath this one.
  std::filesystem::path work_dir;

  // Throws ConfigError if a template lacks a required placeholder.
  void validate() const;
};

struct CrossInferOptions {
  std::size_t k = 4;
  std::uint64_t seed = 0;
  std::size_t gold_index = 0;
  // Folds run concurrently up to this many at a time; 0 means k.
  std::size_t jobs = 0;
};

// Shuffles [0, corpus_size) with a seeded Fisher-Yates pass and cuts it
// into k contiguous folds whose sizes differ by at most one. Each fold is
// returned in ascending index order. Throws ConfigError unless
// 2 <= k <= corpus_size.
std::vector<std::vector<std::size_t>> partition(std::size_t corpus_size,
                                                std::size_t k,
                                                std::uint64_t seed);

// Fills `template_text` placeholders of the form {name}. Unknown names are
// left alone.
std::string expand_template(
    std::string_view template_text,
    std::span<const std::pair<std::string, std::string>> values);

// Runs the corrector once per fold and returns one triple per example in
// corpus order. Throws FoldFailureError (with the captured log) when a
// corrector command exits non-zero and ProtocolError when the output line
// count differs from the input.
std::vector<CandidateTriple> cross_infer(std::span<const ParallelExample> corpus,
                                         const CrossInferOptions& options,
                                         const CorrectorHandle& corrector);

}  // namespace ocgec
