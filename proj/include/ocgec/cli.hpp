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

#include <filesystem>
#include <map>
#include <string>

#include "ocgec/config.hpp"

namespace ocgec::cli {

// Exit codes: 0 success, 1 input or configuration error, 2 external
// process failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitProcess = 2;

int run(int argc, char** argv);

// End-to-end run driven by `cfg`; returns the files written, keyed by role
// (triples, train_text, lm_model, filtered, hyp_m2, filtered_m2, ref_m2,
// score_system, score_filtered).
std::map<std::string, std::filesystem::path> run_pipeline(const PipelineConfig& cfg);

}  // namespace ocgec::cli
