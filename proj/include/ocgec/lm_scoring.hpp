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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "ocgec/text_core.hpp"

namespace ocgec {

// Total negative log-likelihood in nats over `token_count` predictions.
struct NllScore {
  double nll_total = 0.0;
  std::size_t token_count = 0;
};

// Scores whole sentences. Implementations must be deterministic for a fixed
// model and safe to call from several threads.
class LMScorer {
 public:
  virtual ~LMScorer() = default;
  virtual NllScore score(const Sentence& s) const = 0;
};

// exp(nll_total / token_count). Throws DomainError when token_count is 0.
double perplexity(double nll_total, std::size_t token_count);
inline double perplexity(const NllScore& s) {
  return perplexity(s.nll_total, s.token_count);
}

inline NllScore sentence_nll(const LMScorer& scorer, const Sentence& s) {
  return scorer.score(s);
}
inline double sentence_perplexity(const LMScorer& scorer, const Sentence& s) {
  return perplexity(scorer.score(s));
}

// Character n-gram model with add-k smoothing.
//
// Each sentence is padded with order-1 start symbols and closed by one end
// symbol, so a sentence of n units yields n + 1 predictions. Units never
// seen in training share a single unknown bucket. For a context c,
//
//   p(w | c) = (count(c, w) + k) / (count(c) + k * (|V| + 1))
//
// where V is the observed units plus the end symbol and the extra slot is
// the unknown bucket, so every context distribution sums to one.
class CharNgramLM final : public LMScorer {
 public:
  static constexpr char32_t kStart = 0x110000;
  static constexpr char32_t kEnd = 0x110001;
  static constexpr char32_t kUnknown = 0x110002;
  static constexpr std::string_view kFileMagic = "ocgec-ngram";
  static constexpr int kFileVersion = 1;

  // Throws ConfigError for an empty corpus, order < 1 or smooth_k <= 0.
  static CharNgramLM train(std::span<const Sentence> corpus, int order = 3,
                           double smooth_k = 0.1);

  // Model file: a header line
  //   ocgec-ngram<TAB>1<TAB>order=<n><TAB>smooth_k=<k>
  // then one `context<TAB>next<TAB>count` row per observed n-gram, sorted.
  // Symbols are lowercase hex code points separated by spaces, `^` for the
  // start pad, `$` for the end symbol, and `-` for the empty context.
  static CharNgramLM load(std::string_view text);
  std::string save() const;

  int order() const { return order_; }
  double smooth_k() const { return smooth_k_; }
  // Observed units plus the end symbol.
  std::size_t vocabulary_size() const { return vocab_.size() + 1; }
  bool in_vocabulary(char32_t unit) const;

  // `context` holds order-1 symbols (kStart allowed); `next` may be kEnd.
  std::uint64_t count(std::u32string_view context, char32_t next) const;
  std::uint64_t context_total(std::u32string_view context) const;
  double probability(std::u32string_view context, char32_t next) const;

  NllScore score(const Sentence& s) const override;

 private:
  struct ContextCounts {
    std::uint64_t total = 0;
    std::unordered_map<char32_t, std::uint64_t> next;
  };

  CharNgramLM(int order, double smooth_k) : order_(order), smooth_k_(smooth_k) {}
  char32_t map_unit(char32_t u) const;
  void add(const std::u32string& context, char32_t next, std::uint64_t n);

  int order_;
  double smooth_k_;
  std::unordered_set<char32_t> vocab_;
  std::unordered_map<std::u32string, ContextCounts> counts_;
};

// Delegates scoring to a long-running child process: one sentence per line
// in, one `<nll_total> <token_count>` line out, in order. Requests are
// serialized. Any protocol break or child exit raises ScorerError.
class ProcessScorer final : public LMScorer {
 public:
  explicit ProcessScorer(const std::string& command);
  ~ProcessScorer() override;

  NllScore score(const Sentence& s) const override;

 private:
  struct Channel;
  mutable std::mutex mutex_;
  std::unique_ptr<Channel> channel_;
};

}  // namespace ocgec
