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

// Random fixtures for property tests. All draws come from a caller-owned
// std::mt19937_64 so every test is reproducible from its seed.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "ocgec/text_core.hpp"

namespace ocgec::gen {

inline std::size_t below(std::mt19937_64& rng, std::size_t n) {
  return n == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

// A unit from a mixed pool: ASCII letters and digits, a few punctuation
// marks, and a block of common CJK ideographs. `alphabet` limits the pool
// size to force repeats.
inline char32_t unit(std::mt19937_64& rng, std::size_t alphabet = 0) {
  static const std::u32string pool = [] {
    std::u32string p = U"abcdefghijklmnopqrstuvwxyz0123456789,.!?";
    p += U"的一是在不了有和人这中大为上个国我以要他时来用们生到作地于出就分对成会可主发年动同工也能下过子说产种面而方后多定行学法所民得经十三之进着等部度家电力里如水化高自二理起小物现实加量都两体制机当使点从业本去把性好应开它合还因由其些然前外天政四日那社义事平形相全表间样与关各重新线内数正心反你明看原又么利比或但质气第向道命此变条只没结解问意建月公无系军很情者最立代想已通并提直题党程展五果料象员革位入常文总次品式活设及管特件长求老头基资边流路级少图山统接知较将组见计别她手角期根论运农指几九区强放决西被干做必战先回则任取据处理府研质";
    return p;
  }();
  const std::size_t n = alphabet == 0 ? pool.size() : std::min(alphabet, pool.size());
  return pool[below(rng, n)];
}

inline std::u32string text(std::mt19937_64& rng, std::size_t max_len, std::size_t alphabet = 0) {
  std::u32string s(below(rng, max_len + 1), U'\0');
  for (char32_t& c : s) c = unit(rng, alphabet);
  return s;
}

// Copies `s` with up to `max_edits` random insertions, deletions and
// substitutions of up to three units each.
inline std::u32string mutate(std::mt19937_64& rng, std::u32string s, std::size_t max_edits,
                             std::size_t alphabet = 0) {
  const std::size_t n = below(rng, max_edits + 1);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t pos = below(rng, s.size() + 1);
    const std::size_t len = 1 + below(rng, 3);
    switch (below(rng, 3)) {
      case 0: {
        std::u32string ins(len, U'\0');
        for (char32_t& c : ins) c = unit(rng, alphabet);
        s.insert(pos, ins);
        break;
      }
      case 1:
        if (pos < s.size()) s.erase(pos, len);
        break;
      default:
        for (std::size_t i = pos; i < std::min(s.size(), pos + len); ++i) s[i] = unit(rng, alphabet);
        break;
    }
  }
  return s;
}

// A valid random edit set over a source of length `n`.
inline EditSet edit_set(std::mt19937_64& rng, std::size_t n, std::size_t max_edits,
                        std::size_t alphabet = 0) {
  std::vector<Edit> edits;
  std::size_t cursor = 0;
  const std::size_t target = below(rng, max_edits + 1);
  while (edits.size() < target && cursor <= n) {
    const std::size_t start = cursor + below(rng, std::min<std::size_t>(4, n - cursor + 1));
    const std::size_t len = start < n ? below(rng, std::min<std::size_t>(3, n - start + 1)) : 0;
    Edit e;
    e.start = start;
    e.end = start + len;
    const std::size_t repl = below(rng, 3);
    for (std::size_t i = 0; i < repl; ++i) e.replacement.push_back(unit(rng, alphabet));
    if (e.is_insertion() && e.replacement.empty()) e.replacement.push_back(unit(rng, alphabet));
    edits.push_back(std::move(e));
    cursor = edits.back().end + (edits.back().is_insertion() ? 1 : 0);
  }
  return EditSet(n, std::move(edits));
}

}  // namespace ocgec::gen
