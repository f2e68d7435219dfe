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

#include "ocgec/utf8.hpp"

#include <cstdint>

#include "ocgec/error.hpp"

namespace ocgec::utf8 {
namespace {

bool is_scalar(char32_t c) {
  return c <= 0x10FFFF && !(c >= 0xD800 && c <= 0xDFFF);
}

std::string at(std::size_t offset) {
  return "invalid UTF-8 at byte " + std::to_string(offset);
}

}  // namespace

std::u32string decode(std::string_view bytes) {
  std::u32string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    const auto lead = static_cast<std::uint8_t>(bytes[i]);
    if (lead < 0x80) {
      out.push_back(lead);
      ++i;
      continue;
    }
    std::size_t extra;
    char32_t value;
    char32_t min_value;
    if ((lead & 0xE0) == 0xC0) {
      extra = 1;
      value = lead & 0x1F;
      min_value = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2;
      value = lead & 0x0F;
      min_value = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3;
      value = lead & 0x07;
      min_value = 0x10000;
    } else {
      throw FormatError(at(i));
    }
    if (i + extra >= bytes.size()) {
      throw FormatError(at(i) + " (truncated sequence)");
    }
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cont = static_cast<std::uint8_t>(bytes[i + k]);
      if ((cont & 0xC0) != 0x80) throw FormatError(at(i + k));
      value = (value << 6) | (cont & 0x3F);
    }
    if (value < min_value || !is_scalar(value)) throw FormatError(at(i));
    out.push_back(value);
    i += extra + 1;
  }
  return out;
}

void append(std::string& out, char32_t c) {
  if (!is_scalar(c)) {
    throw FormatError("cannot encode non-scalar value " +
                      std::to_string(static_cast<std::uint32_t>(c)));
  }
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string encode(std::u32string_view units) {
  std::string out;
  out.reserve(units.size());
  for (char32_t c : units) append(out, c);
  return out;
}

}  // namespace ocgec::utf8
