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

// Pipeline configuration, an INI file:
//
//   [corpus]     train = parallel TSV used for k-fold construction
//   [kfold]      k, seed, gold_index, jobs
//   [corrector]  train, infer (command templates)
//   [scorer]     type = ngram|process, train_text, model, order, smooth_k,
//                command
//   [filter]     granularity, max_exhaustive, beam_width
//   [eval]       source, hypothesis, references (optional)
//   [output]     dir
//
// Relative paths resolve against the config file's directory.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "ocgec/overcorrection_filter.hpp"

namespace ocgec {

struct PipelineConfig {
  std::filesystem::path train_corpus;

  std::size_t k = 4;
  std::uint64_t seed = 0;
  std::size_t gold_index = 0;
  std::size_t jobs = 0;

  std::string corrector_train;
  std::string corrector_infer;

  std::string scorer_type = "ngram";
  std::filesystem::path scorer_train_text;
  std::filesystem::path scorer_model;
  int order = 3;
  double smooth_k = 0.1;
  std::string scorer_command;

  Granularity granularity = Granularity::kEdit;
  FilterOptions filter;

  std::filesystem::path eval_source;
  std::filesystem::path eval_hypothesis;
  std::filesystem::path eval_references;

  std::filesystem::path output_dir = "out";
};

// Throws ConfigError carrying the file name and, for syntax errors, the
// line number. Unknown sections or keys are rejected.
PipelineConfig load_config(const std::filesystem::path& path);

}  // namespace ocgec
