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

#include "ocgec/kfold_builder.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <random>
#include <thread>

#include "ocgec/error.hpp"
#include "ocgec/gold_merge.hpp"
#include "ocgec/subprocess.hpp"

namespace ocgec {
namespace {

// Unbiased draw from [0, bound) by rejection; std::uniform_int_distribution
// is implementation-defined and would make folds differ across toolchains.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

std::string tail_of(const std::filesystem::path& log) {
  std::string text;
  try {
    text = read_file(log);
  } catch (const Error&) {
    return "";
  }
  constexpr std::size_t kMax = 4096;
  if (text.size() > kMax) text = "..." + text.substr(text.size() - kMax);
  return text;
}

std::vector<Sentence> run_fold(std::span<const ParallelExample> corpus,
                               const std::vector<std::vector<std::size_t>>& folds,
                               std::size_t fold, std::size_t gold_index,
                               const CorrectorHandle& corrector) {
  namespace fs = std::filesystem;
  const fs::path dir = corrector.work_dir / ("fold_" + std::to_string(fold));
  const fs::path model_dir = dir / "model";
  fs::create_directories(model_dir);

  // Training pairs stay in corpus order.
  std::vector<std::size_t> train_ids;
  for (std::size_t f = 0; f < folds.size(); ++f) {
    if (f != fold) train_ids.insert(train_ids.end(), folds[f].begin(), folds[f].end());
  }
  std::sort(train_ids.begin(), train_ids.end());
  std::vector<ParallelExample> train;
  for (std::size_t idx : train_ids) {
    train.push_back({corpus[idx].source, {corpus[idx].references[gold_index]}});
  }

  std::vector<Sentence> inputs;
  for (std::size_t idx : folds[fold]) inputs.push_back(corpus[idx].source);

  const fs::path train_file = dir / "train.tsv";
  const fs::path input_file = dir / "input.txt";
  const fs::path output_file = dir / "output.txt";
  write_file(train_file, write_parallel_tsv(train));
  write_file(input_file, write_sentences(inputs));
  fs::remove(output_file);

  const std::pair<std::string, std::string> values[] = {
      {"train_file", shell_quote(train_file.string())},
      {"model_dir", shell_quote(model_dir.string())},
      {"input_file", shell_quote(input_file.string())},
      {"output_file", shell_quote(output_file.string())},
  };

  const fs::path train_log = dir / "train.log";
  int rc = run_shell(expand_template(corrector.train_command, values), train_log);
  if (rc != 0) {
    throw FoldFailureError(fold, "train command exited with status " + std::to_string(rc),
                           tail_of(train_log));
  }
  const fs::path infer_log = dir / "infer.log";
  rc = run_shell(expand_template(corrector.infer_command, values), infer_log);
  if (rc != 0) {
    throw FoldFailureError(fold, "infer command exited with status " + std::to_string(rc),
                           tail_of(infer_log));
  }

  std::string output;
  try {
    output = read_file(output_file);
  } catch (const FormatError&) {
    throw ProtocolError("fold " + std::to_string(fold) + ": corrector wrote no " +
                        output_file.string());
  }
  std::vector<Sentence> outputs;
  try {
    outputs = parse_sentences(output);
  } catch (const ParseError& e) {
    throw ProtocolError("fold " + std::to_string(fold) + ": " + output_file.string() +
                        " " + e.what());
  }
  if (outputs.size() != inputs.size()) {
    throw ProtocolError("fold " + std::to_string(fold) + ": corrector returned " +
                        std::to_string(outputs.size()) + " lines for " +
                        std::to_string(inputs.size()) + " inputs");
  }
  return outputs;
}

}  // namespace

void CorrectorHandle::validate() const {
  for (const char* p : {"{train_file}", "{model_dir}"}) {
    if (train_command.find(p) == std::string::npos) {
      throw ConfigError(std::string("corrector train command lacks ") + p);
    }
  }
  for (const char* p : {"{model_dir}", "{input_file}", "{output_file}"}) {
    if (infer_command.find(p) == std::string::npos) {
      throw ConfigError(std::string("corrector infer command lacks ") + p);
    }
  }
  if (work_dir.empty()) throw ConfigError("corrector work directory is empty");
}

std::vector<std::vector<std::size_t>> partition(std::size_t corpus_size,
                                                std::size_t k,
                                                std::uint64_t seed) {
  if (k < 2 || k > corpus_size) {
    throw ConfigError("k must satisfy 2 <= k <= corpus size (k=" + std::to_string(k) +
                      ", corpus size=" + std::to_string(corpus_size) + ")");
  }
  std::vector<std::size_t> order(corpus_size);
  for (std::size_t i = 0; i < corpus_size; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = corpus_size - 1; i > 0; --i) {
    std::swap(order[i], order[draw_below(rng, i + 1)]);
  }
  std::vector<std::vector<std::size_t>> folds(k);
  const std::size_t base = corpus_size / k;
  const std::size_t extra = corpus_size % k;
  std::size_t pos = 0;
  for (std::size_t f = 0; f < k; ++f) {
    const std::size_t size = base + (f < extra ? 1 : 0);
    folds[f].assign(order.begin() + static_cast<std::ptrdiff_t>(pos),
                    order.begin() + static_cast<std::ptrdiff_t>(pos + size));
    std::sort(folds[f].begin(), folds[f].end());
    pos += size;
  }
  return folds;
}

std::string expand_template(
    std::string_view template_text,
    std::span<const std::pair<std::string, std::string>> values) {
  std::string out;
  std::size_t i = 0;
  while (i < template_text.size()) {
    if (template_text[i] == '{') {
      const std::size_t close = template_text.find('}', i);
      if (close != std::string_view::npos) {
        const std::string_view name = template_text.substr(i + 1, close - i - 1);
        const auto it = std::find_if(values.begin(), values.end(),
                                     [&](const auto& v) { return v.first == name; });
        if (it != values.end()) {
          out += it->second;
          i = close + 1;
          continue;
        }
      }
    }
    out.push_back(template_text[i++]);
  }
  return out;
}

std::vector<CandidateTriple> cross_infer(std::span<const ParallelExample> corpus,
                                         const CrossInferOptions& options,
                                         const CorrectorHandle& corrector) {
  corrector.validate();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (corpus[i].references.size() <= options.gold_index) {
      throw ConfigError("example " + std::to_string(i + 1) + " has no reference at index " +
                        std::to_string(options.gold_index));
    }
  }
  const auto folds = partition(corpus.size(), options.k, options.seed);

  std::vector<std::vector<Sentence>> outputs(folds.size());
  std::vector<std::exception_ptr> failures(folds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t f = next++; f < folds.size(); f = next++) {
      try {
        outputs[f] = run_fold(corpus, folds, f, options.gold_index, corrector);
      } catch (...) {
        failures[f] = std::current_exception();
      }
    }
  };
  const std::size_t jobs =
      std::clamp<std::size_t>(options.jobs == 0 ? folds.size() : options.jobs, 1, folds.size());
  std::vector<std::thread> threads;
  for (std::size_t t = 1; t < jobs; ++t) threads.emplace_back(worker);
  worker();
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& e : failures) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<CandidateTriple> triples(corpus.size());
  for (std::size_t f = 0; f < folds.size(); ++f) {
    for (std::size_t k = 0; k < folds[f].size(); ++k) {
      const std::size_t idx = folds[f][k];
      const ParallelExample& ex = corpus[idx];
      const Sentence& gold = ex.references[options.gold_index];
      triples[idx] = {ex.source, build_candidate(ex.source, outputs[f][k], gold), gold};
    }
  }
  return triples;
}

}  // namespace ocgec
