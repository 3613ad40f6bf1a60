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

#ifndef SPANDIAG_UNICODE_H_
#define SPANDIAG_UNICODE_H_

#include <string>
#include <string_view>

// Minimal, locale-independent UTF-8 handling. Case mapping covers the Latin
// blocks (ASCII, Latin-1 Supplement, Latin Extended-A and the case pairs of
// Extended-B), which is what span-identification corpora in European
// languages need. Codepoints outside the tables pass through unchanged.

namespace spandiag::uni {

// Throws ParseError on malformed UTF-8.
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(const std::u32string& s);

bool is_letter(char32_t c);
char32_t to_lower(char32_t c);
char32_t to_upper(char32_t c);
bool is_lower_letter(char32_t c);
bool is_upper_letter(char32_t c);

// Whole-token transforms. Non-letter characters are untouched; `title`
// uppercases the first letter and lowercases every following letter.
std::string lower(std::string_view token);
std::string upper(std::string_view token);
std::string title(std::string_view token);

// True if the token contains at least one letter.
bool has_letter(std::string_view token);

// The token with all non-letter characters removed, lowercased.
std::string letters_lower(std::string_view token);

}  // namespace spandiag::uni

#endif  // SPANDIAG_UNICODE_H_
