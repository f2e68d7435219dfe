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

#include "ocgec/text_core.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "ocgec/error.hpp"
#include "ocgec/utf8.hpp"

namespace ocgec {
namespace {

std::string describe(const Edit& e) {
  return "[" + std::to_string(e.start) + "," + std::to_string(e.end) + ")";
}

}  // namespace

Sentence::Sentence(std::u32string units) : units_(std::move(units)) {
  for (char32_t c : units_) {
    if (c > 0x10FFFF || (c >= 0xD800 && c <= 0xDFFF)) {
      throw FormatError("sentence contains a non-scalar unit");
    }
  }
}

Sentence Sentence::from_utf8(std::string_view text) {
  Sentence s;
  s.units_ = utf8::decode(text);
  return s;
}

std::string Sentence::to_utf8() const { return utf8::encode(units_); }

EditSet::EditSet(std::size_t source_length, std::vector<Edit> edits)
    : source_length_(source_length), edits_(std::move(edits)) {
  std::sort(edits_.begin(), edits_.end(), [](const Edit& a, const Edit& b) {
    return a.start != b.start ? a.start < b.start : a.end < b.end;
  });
  for (std::size_t i = 0; i < edits_.size(); ++i) {
    const Edit& e = edits_[i];
    if (e.start > e.end || e.end > source_length_) {
      throw InvalidEditError("edit " + describe(e) +
                             " out of bounds for source length " +
                             std::to_string(source_length_));
    }
    if (e.is_insertion() && e.replacement.empty()) {
      throw InvalidEditError("null edit at " + describe(e));
    }
    if (i == 0) continue;
    const Edit& prev = edits_[i - 1];
    if (prev.end > e.start) {
      throw InvalidEditSetError("edits " + describe(prev) + " and " +
                                describe(e) + " overlap");
    }
    if (prev.is_insertion() && e.is_insertion() && prev.start == e.start) {
      throw InvalidEditSetError("two insertions at position " +
                                std::to_string(e.start));
    }
  }
}

EditSet EditSet::subset(std::span<const std::size_t> positions) const {
  std::vector<std::size_t> sorted(positions.begin(), positions.end());
  std::sort(sorted.begin(), sorted.end());
  EditSet out(source_length_);
  out.edits_.reserve(sorted.size());
  for (std::size_t p : sorted) out.edits_.push_back(edits_.at(p));
  return out;
}

EditSet extract_edits(const Sentence& src, const Sentence& hyp) {
  const std::size_t m = src.size();
  const std::size_t n = hyp.size();
  const std::size_t cols = n + 1;
  std::vector<std::uint32_t> dp((m + 1) * cols);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& {
    return dp[i * cols + j];
  };
  for (std::size_t j = 0; j <= n; ++j) at(0, j) = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    at(i, 0) = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= n; ++j) {
      const std::uint32_t diag =
          at(i - 1, j - 1) + (src[i - 1] == hyp[j - 1] ? 0u : 1u);
      at(i, j) = std::min({diag, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  enum class Op : std::uint8_t { kMatch, kSubstitute, kDelete, kInsert };
  std::vector<Op> ops;
  ops.reserve(m + n);
  std::size_t i = m;
  std::size_t j = n;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      const bool equal = src[i - 1] == hyp[j - 1];
      if (at(i, j) == at(i - 1, j - 1) + (equal ? 0u : 1u)) {
        ops.push_back(equal ? Op::kMatch : Op::kSubstitute);
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && at(i, j) == at(i - 1, j) + 1) {
      ops.push_back(Op::kDelete);
      --i;
    } else {
      ops.push_back(Op::kInsert);
      --j;
    }
  }
  std::reverse(ops.begin(), ops.end());

  std::vector<Edit> edits;
  std::size_t si = 0;
  std::size_t hi = 0;
  std::size_t k = 0;
  while (k < ops.size()) {
    if (ops[k] == Op::kMatch) {
      ++si;
      ++hi;
      ++k;
      continue;
    }
    Edit e;
    e.start = si;
    for (; k < ops.size() && ops[k] != Op::kMatch; ++k) {
      switch (ops[k]) {
        case Op::kSubstitute:
          e.replacement.push_back(hyp[hi++]);
          ++si;
          break;
        case Op::kDelete:
          ++si;
          break;
        case Op::kInsert:
          e.replacement.push_back(hyp[hi++]);
          break;
        case Op::kMatch:
          break;
      }
    }
    e.end = si;
    edits.push_back(std::move(e));
  }
  return EditSet(m, std::move(edits));
}

Sentence apply_edits(const Sentence& src, const EditSet& edits) {
  if (edits.source_length() != src.size()) {
    throw InvalidEditError("edit set built for source length " +
                           std::to_string(edits.source_length()) +
                           ", applied to length " + std::to_string(src.size()));
  }
  const std::u32string& in = src.units();
  std::u32string out;
  out.reserve(in.size());
  std::size_t cursor = 0;
  for (const Edit& e : edits) {
    out.append(in, cursor, e.start - cursor);
    out.append(e.replacement);
    cursor = e.end;
  }
  out.append(in, cursor, std::u32string::npos);
  return Sentence(std::move(out));
}

Sentence apply_edits(const Sentence& src, std::span<const Edit> edits) {
  return apply_edits(src,
                     EditSet(src.size(), std::vector<Edit>(edits.begin(), edits.end())));
}

}  // namespace ocgec
