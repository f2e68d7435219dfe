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

#include "ocgec/lm_scoring.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <vector>

#include "ocgec/error.hpp"
#include "ocgec/subprocess.hpp"
#include "ocgec/text_io.hpp"

namespace ocgec {
namespace {

std::string encode_symbol(char32_t c) {
  if (c == CharNgramLM::kStart) return "^";
  if (c == CharNgramLM::kEnd) return "$";
  char buf[16];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, static_cast<std::uint32_t>(c), 16);
  return std::string(buf, ptr);
}

char32_t decode_symbol(std::string_view s, std::size_t line_no) {
  if (s == "^") return CharNgramLM::kStart;
  if (s == "$") return CharNgramLM::kEnd;
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (ec != std::errc() || ptr != s.data() + s.size() || v > 0x10FFFF ||
      (v >= 0xD800 && v <= 0xDFFF)) {
    throw ParseError(line_no, "bad symbol '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t p = s.find(sep, pos);
    out.push_back(s.substr(pos, p == std::string_view::npos ? s.npos : p - pos));
    if (p == std::string_view::npos) break;
    pos = p + 1;
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

template <typename T>
T parse_number(std::string_view s, std::size_t line_no, const char* what) {
  T v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line_no, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

double perplexity(double nll_total, std::size_t token_count) {
  if (token_count == 0) throw DomainError("perplexity of zero tokens");
  return std::exp(nll_total / static_cast<double>(token_count));
}

CharNgramLM CharNgramLM::train(std::span<const Sentence> corpus, int order,
                               double smooth_k) {
  if (corpus.empty()) throw ConfigError("cannot train an n-gram model on an empty corpus");
  if (order < 1) throw ConfigError("n-gram order must be at least 1");
  if (!(smooth_k > 0.0) || !std::isfinite(smooth_k)) {
    throw ConfigError("smoothing constant must be a positive number");
  }
  CharNgramLM lm(order, smooth_k);
  const std::size_t history = static_cast<std::size_t>(order - 1);
  for (const Sentence& s : corpus) {
    std::u32string padded(history, kStart);
    padded += s.units();
    padded.push_back(kEnd);
    for (std::size_t t = history; t < padded.size(); ++t) {
      lm.add(padded.substr(t - history, history), padded[t], 1);
    }
    lm.vocab_.insert(s.units().begin(), s.units().end());
  }
  return lm;
}

void CharNgramLM::add(const std::u32string& context, char32_t next, std::uint64_t n) {
  ContextCounts& c = counts_[context];
  c.total += n;
  c.next[next] += n;
}

bool CharNgramLM::in_vocabulary(char32_t unit) const {
  return unit == kEnd || vocab_.contains(unit);
}

char32_t CharNgramLM::map_unit(char32_t u) const {
  if (u == kStart || u == kEnd) return u;
  return vocab_.contains(u) ? u : kUnknown;
}

std::uint64_t CharNgramLM::count(std::u32string_view context, char32_t next) const {
  const auto it = counts_.find(std::u32string(context));
  if (it == counts_.end()) return 0;
  const auto jt = it->second.next.find(next);
  return jt == it->second.next.end() ? 0 : jt->second;
}

std::uint64_t CharNgramLM::context_total(std::u32string_view context) const {
  const auto it = counts_.find(std::u32string(context));
  return it == counts_.end() ? 0 : it->second.total;
}

double CharNgramLM::probability(std::u32string_view context, char32_t next) const {
  std::u32string ctx(context);
  for (char32_t& c : ctx) c = map_unit(c);
  const char32_t w = map_unit(next);
  const double outcomes = static_cast<double>(vocabulary_size() + 1);
  return (static_cast<double>(count(ctx, w)) + smooth_k_) /
         (static_cast<double>(context_total(ctx)) + smooth_k_ * outcomes);
}

NllScore CharNgramLM::score(const Sentence& s) const {
  const std::size_t history = static_cast<std::size_t>(order_ - 1);
  std::u32string padded(history, kStart);
  for (char32_t u : s.units()) padded.push_back(map_unit(u));
  padded.push_back(kEnd);
  const double outcomes = static_cast<double>(vocabulary_size() + 1);
  NllScore out;
  std::u32string ctx;
  for (std::size_t t = history; t < padded.size(); ++t) {
    ctx.assign(padded, t - history, history);
    std::uint64_t hit = 0;
    std::uint64_t total = 0;
    if (const auto it = counts_.find(ctx); it != counts_.end()) {
      total = it->second.total;
      if (const auto jt = it->second.next.find(padded[t]); jt != it->second.next.end()) {
        hit = jt->second;
      }
    }
    const double p = (static_cast<double>(hit) + smooth_k_) /
                     (static_cast<double>(total) + smooth_k_ * outcomes);
    out.nll_total -= std::log(p);
    ++out.token_count;
  }
  return out;
}

std::string CharNgramLM::save() const {
  struct Row {
    std::string context;
    std::string next;
    std::uint64_t count;
  };
  std::vector<Row> rows;
  for (const auto& [ctx, cc] : counts_) {
    std::string ctx_text;
    for (char32_t c : ctx) {
      if (!ctx_text.empty()) ctx_text.push_back(' ');
      ctx_text += encode_symbol(c);
    }
    if (ctx_text.empty()) ctx_text = "-";
    for (const auto& [next, n] : cc.next) rows.push_back({ctx_text, encode_symbol(next), n});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return a.context != b.context ? a.context < b.context : a.next < b.next;
  });
  std::string out(kFileMagic);
  out += "\t" + std::to_string(kFileVersion) + "\torder=" + std::to_string(order_) +
         "\tsmooth_k=" + format_double(smooth_k_) + "\n";
  for (const Row& r : rows) {
    out += r.context + "\t" + r.next + "\t" + std::to_string(r.count) + "\n";
  }
  return out;
}

CharNgramLM CharNgramLM::load(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty n-gram model file");
  const auto header = split(lines[0], '\t');
  if (header.size() != 4 || header[0] != kFileMagic) {
    throw ParseError(1, "not an n-gram model file");
  }
  if (parse_number<int>(header[1], 1, "version") != kFileVersion) {
    throw ParseError(1, "unsupported model file version " + std::string(header[1]));
  }
  if (!header[2].starts_with("order=") || !header[3].starts_with("smooth_k=")) {
    throw ParseError(1, "expected order= and smooth_k= fields");
  }
  const int order = parse_number<int>(header[2].substr(6), 1, "order");
  const double k = parse_number<double>(header[3].substr(9), 1, "smooth_k");
  if (order < 1 || !(k > 0.0)) throw ParseError(1, "order or smooth_k out of range");

  CharNgramLM lm(order, k);
  const std::size_t history = static_cast<std::size_t>(order - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    if (lines[i].empty()) continue;
    const auto fields = split(lines[i], '\t');
    if (fields.size() != 3) throw ParseError(line_no, "expected context, next, count");
    std::u32string ctx;
    if (fields[0] != "-") {
      for (std::string_view sym : split(fields[0], ' ')) ctx.push_back(decode_symbol(sym, line_no));
    }
    if (ctx.size() != history) throw ParseError(line_no, "context length does not match order");
    const char32_t next = decode_symbol(fields[1], line_no);
    if (next == kStart) throw ParseError(line_no, "start symbol cannot be predicted");
    const auto n = parse_number<std::uint64_t>(fields[2], line_no, "count");
    lm.add(ctx, next, n);
    if (next != kEnd) lm.vocab_.insert(next);
  }
  return lm;
}

struct ProcessScorer::Channel {
  explicit Channel(const std::string& command) : line(command) {}
  LineChannel line;
};

ProcessScorer::ProcessScorer(const std::string& command)
    : channel_(std::make_unique<Channel>(command)) {}

ProcessScorer::~ProcessScorer() = default;

NllScore ProcessScorer::score(const Sentence& s) const {
  const std::string text = s.to_utf8();
  if (text.find_first_of("\r\n") != std::string::npos) {
    throw FormatError("cannot send a sentence containing a line break to the scorer");
  }
  std::lock_guard<std::mutex> lock(mutex_);
  LineChannel& ch = channel_->line;
  auto fail = [&](const std::string& what) -> ScorerError {
    const int rc = ch.close();
    return ScorerError("external scorer " + what + " (exit status " + std::to_string(rc) + ")");
  };
  if (!ch.write_line(text)) throw fail("stopped reading input");
  const auto reply = ch.read_line();
  if (!reply) throw fail("closed its output");
  const auto fields = split(*reply, ' ');
  if (fields.size() != 2) throw ScorerError("malformed scorer reply '" + *reply + "'");
  NllScore out;
  try {
    out.nll_total = parse_number<double>(fields[0], 1, "nll");
    out.token_count = parse_number<std::size_t>(fields[1], 1, "token count");
  } catch (const ParseError&) {
    throw ScorerError("malformed scorer reply '" + *reply + "'");
  }
  if (out.nll_total < 0 || !std::isfinite(out.nll_total) || out.token_count == 0) {
    throw ScorerError("scorer reply out of range '" + *reply + "'");
  }
  return out;
}

}  // namespace ocgec
