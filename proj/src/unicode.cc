// Copyright 2026 The spandiag Authors.
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

#include "spandiag/unicode.h"

#include "spandiag/corpus.h"

namespace spandiag::uni {

namespace {

constexpr char32_t kMultiplication = 0x00D7;
constexpr char32_t kDivision = 0x00F7;

}  // namespace

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    std::size_t len = 0;
    if (b0 < 0x80) {
      cp = b0;
      len = 1;
    } else if ((b0 & 0xE0) == 0xC0) {
      cp = b0 & 0x1F;
      len = 2;
    } else if ((b0 & 0xF0) == 0xE0) {
      cp = b0 & 0x0F;
      len = 3;
    } else if ((b0 & 0xF8) == 0xF0) {
      cp = b0 & 0x07;
      len = 4;
    } else {
      throw ParseError("malformed UTF-8 byte at offset " + std::to_string(i));
    }
    if (i + len > s.size()) {
      throw ParseError("truncated UTF-8 sequence at offset " +
                       std::to_string(i));
    }
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        throw ParseError("malformed UTF-8 continuation at offset " +
                         std::to_string(i + k));
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong encodings and surrogates.
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
        (len == 4 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF) ||
        cp > 0x10FFFF) {
      throw ParseError("invalid UTF-8 codepoint at offset " +
                       std::to_string(i));
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode_utf8(const std::u32string& s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

bool is_letter(char32_t c) {
  if ((c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z')) return true;
  if (c >= 0x00C0 && c <= 0x00FF) {
    return c != kMultiplication && c != kDivision;
  }
  // Latin Extended-A and Extended-B.
  if (c >= 0x0100 && c <= 0x024F) return true;
  if (c == 0x1E9E) return true;  // capital sharp s
  return false;
}

char32_t to_lower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 0x20;
  if (c >= 0x00C0 && c <= 0x00DE && c != kMultiplication) return c + 0x20;
  if (c == 0x1E9E) return 0x00DF;  // ẞ -> ß
  if (c == 0x0178) return 0x00FF;  // Ÿ -> ÿ
  if (c >= 0x0100 && c <= 0x0137) return (c % 2 == 0) ? c + 1 : c;
  if (c >= 0x0139 && c <= 0x0148) return (c % 2 == 1) ? c + 1 : c;
  if (c >= 0x014A && c <= 0x0177) return (c % 2 == 0) ? c + 1 : c;
  if (c >= 0x0179 && c <= 0x017E) return (c % 2 == 1) ? c + 1 : c;
  return c;
}

char32_t to_upper(char32_t c) {
  if (c >= U'a' && c <= U'z') return c - 0x20;
  if (c >= 0x00E0 && c <= 0x00FE && c != kDivision) return c - 0x20;
  if (c == 0x00DF) return 0x1E9E;  // ß -> ẞ
  if (c == 0x00FF) return 0x0178;  // ÿ -> Ÿ
  if (c == 0x0131) return U'I';    // dotless i
  if (c == 0x017F) return U'S';    // long s
  if (c >= 0x0100 && c <= 0x0137) return (c % 2 == 1) ? c - 1 : c;
  if (c >= 0x013A && c <= 0x0148) return (c % 2 == 0) ? c - 1 : c;
  if (c >= 0x014A && c <= 0x0177) return (c % 2 == 1) ? c - 1 : c;
  if (c >= 0x017A && c <= 0x017E) return (c % 2 == 0) ? c - 1 : c;
  return c;
}

bool is_lower_letter(char32_t c) {
  return is_letter(c) && to_upper(c) != c;
}

bool is_upper_letter(char32_t c) {
  return is_letter(c) && to_lower(c) != c;
}

std::string lower(std::string_view token) {
  std::u32string cps = decode_utf8(token);
  for (char32_t& c : cps) c = to_lower(c);
  return encode_utf8(cps);
}

std::string upper(std::string_view token) {
  std::u32string cps = decode_utf8(token);
  for (char32_t& c : cps) c = to_upper(c);
  return encode_utf8(cps);
}

std::string title(std::string_view token) {
  std::u32string cps = decode_utf8(token);
  bool first = true;
  for (char32_t& c : cps) {
    if (!is_letter(c)) continue;
    c = first ? to_upper(c) : to_lower(c);
    first = false;
  }
  return encode_utf8(cps);
}

bool has_letter(std::string_view token) {
  for (char32_t c : decode_utf8(token)) {
    if (is_letter(c)) return true;
  }
  return false;
}

std::string letters_lower(std::string_view token) {
  std::u32string out;
  for (char32_t c : decode_utf8(token)) {
    if (is_letter(c)) out.push_back(to_lower(c));
  }
  return encode_utf8(out);
}

}  // namespace spandiag::uni
