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

#include "spandiag/attributes.h"

#include <algorithm>
#include <array>

#include "spandiag/unicode.h"

namespace spandiag {

namespace {

// Per-token casing. kSingleUpper is a one-letter uppercase token, which is
// compatible with both upper and title.
enum class TokenCase { kNoLetters, kLower, kUpper, kSingleUpper, kTitle, kMixed };

TokenCase token_case(std::string_view token) {
  std::u32string cps = uni::decode_utf8(token);
  int letters = 0, lowers = 0, uppers = 0;
  bool first_is_upper = false;
  bool rest_all_lower = true;
  for (char32_t c : cps) {
    if (!uni::is_letter(c)) continue;
    ++letters;
    const bool lo = uni::is_lower_letter(c);
    const bool up = uni::is_upper_letter(c);
    if (lo) ++lowers;
    if (up) ++uppers;
    if (letters == 1) {
      first_is_upper = up;
    } else if (!lo) {
      rest_all_lower = false;
    }
  }
  if (letters == 0) return TokenCase::kNoLetters;
  if (lowers == letters) return TokenCase::kLower;
  if (uppers == letters) return letters == 1 ? TokenCase::kSingleUpper : TokenCase::kUpper;
  if (first_is_upper && rest_all_lower) return TokenCase::kTitle;
  return TokenCase::kMixed;
}

bool matches_any(const std::string& word, const ComplianceRules& rules) {
  for (const std::string& p : rules.forbidden_onsets) {
    if (word.starts_with(p)) return true;
  }
  for (const std::string& p : rules.forbidden_codas) {
    if (word.ends_with(p)) return true;
  }
  for (const std::string& p : rules.forbidden_infixes) {
    if (word.find(p) != std::string::npos) return true;
  }
  for (const std::string& p : rules.foreign_chars) {
    if (word.find(p) != std::string::npos) return true;
  }
  return false;
}

struct QuotePair {
  std::string_view open;
  std::string_view close;
};

constexpr std::array<QuotePair, 5> kQuotePairs = {{
    {"\"", "\""},
    {"'", "'"},
    {"“", "”"},  // curly double
    {"‘", "’"},  // curly single
    {"«", "»"},  // guillemets
}};

}  // namespace

void ComplianceRules::validate() const {
  auto check = [](const std::vector<std::string>& patterns, const char* kind) {
    for (const std::string& p : patterns) {
      if (p.empty()) {
        throw ValidationError(std::string(kind) + " contains an empty pattern");
      }
      for (char32_t c : uni::decode_utf8(p)) {
        if (!uni::is_letter(c)) {
          throw ValidationError(std::string(kind) + " pattern '" + p +
                                "' must be letters only");
        }
        if (uni::is_upper_letter(c)) {
          throw ValidationError(std::string(kind) + " pattern '" + p +
                                "' must be lowercase");
        }
      }
    }
  };
  check(forbidden_onsets, "forbidden_onsets");
  check(forbidden_codas, "forbidden_codas");
  check(forbidden_infixes, "forbidden_infixes");
  check(foreign_chars, "foreign_chars");
  for (const std::string& p : foreign_chars) {
    if (uni::decode_utf8(p).size() != 1) {
      throw ValidationError("foreign_chars entry '" + p +
                            "' must be a single character");
    }
  }
}

std::string to_string(LengthClass v) {
  return v == LengthClass::kSingle ? "single" : "multi";
}

std::string to_string(ShapeClass v) {
  switch (v) {
    case ShapeClass::kCompliant: return "compliant";
    case ShapeClass::kNonCompliant: return "non_compliant";
    case ShapeClass::kMixedCompliant: return "mixed_compliant";
  }
  return "";
}

std::string to_string(SpanPosition v) {
  return v == SpanPosition::kInitial ? "initial" : "mid";
}

std::string to_string(CasingClass v) {
  switch (v) {
    case CasingClass::kStandard: return "standard";
    case CasingClass::kLower: return "lower";
    case CasingClass::kUpper: return "upper";
    case CasingClass::kTitle: return "title";
  }
  return "";
}

std::string to_string(AmbiguityClass v) {
  switch (v) {
    case AmbiguityClass::kUnambiguous: return "unambiguous";
    case AmbiguityClass::kAmbiguous: return "ambiguous";
    case AmbiguityClass::kMixedAmbiguous: return "mixed_ambiguous";
  }
  return "";
}

bool is_quote_token(std::string_view token) {
  for (const QuotePair& p : kQuotePairs) {
    if (token == p.open || token == p.close) return true;
  }
  return false;
}

bool is_quote_pair(std::string_view open, std::string_view close) {
  for (const QuotePair& p : kQuotePairs) {
    if (open == p.open && close == p.close) return true;
  }
  return false;
}

Compliance check_compliance(std::string_view word,
                            const ComplianceRules& rules) {
  const std::string stripped = uni::letters_lower(word);
  if (stripped.empty()) return Compliance::kCompliant;
  return matches_any(stripped, rules) ? Compliance::kNonCompliant
                                      : Compliance::kCompliant;
}

ShapeClass shape_class(const std::vector<std::string>& span_tokens,
                       const ComplianceRules& rules) {
  if (span_tokens.empty()) {
    throw ValidationError("shape_class requires at least one token");
  }
  int non_compliant = 0;
  for (const std::string& t : span_tokens) {
    if (check_compliance(t, rules) == Compliance::kNonCompliant) {
      ++non_compliant;
    }
  }
  if (non_compliant == 0) return ShapeClass::kCompliant;
  if (non_compliant == static_cast<int>(span_tokens.size())) {
    return ShapeClass::kNonCompliant;
  }
  return ShapeClass::kMixedCompliant;
}

AmbiguityClass ambiguity_class(const std::vector<std::string>& span_tokens,
                               const Lexicon& lexicon) {
  if (span_tokens.empty()) {
    throw ValidationError("ambiguity_class requires at least one token");
  }
  int known = 0;
  for (const std::string& t : span_tokens) {
    if (lexicon.contains(uni::lower(t))) ++known;
  }
  if (known == 0) return AmbiguityClass::kUnambiguous;
  if (known == static_cast<int>(span_tokens.size())) {
    return AmbiguityClass::kAmbiguous;
  }
  return AmbiguityClass::kMixedAmbiguous;
}

namespace {

// Group classification over per-token cases. `single_upper_as_upper`
// controls how one-letter uppercase tokens are counted.
CasingClass group_class(const std::vector<TokenCase>& cases,
                        bool single_upper_as_upper) {
  int alpha = 0, lower = 0, upper = 0, title = 0;
  for (TokenCase c : cases) {
    if (c == TokenCase::kNoLetters) continue;
    ++alpha;
    switch (c) {
      case TokenCase::kLower:
        ++lower;
        break;
      case TokenCase::kUpper:
        ++upper;
        break;
      case TokenCase::kSingleUpper:
        if (single_upper_as_upper) ++upper;
        ++title;
        break;
      case TokenCase::kTitle:
        ++title;
        break;
      default:
        break;
    }
  }
  if (alpha == 0) return CasingClass::kStandard;
  if (lower == alpha) return CasingClass::kLower;
  if (upper == alpha) return CasingClass::kUpper;
  if (title == alpha) return CasingClass::kTitle;
  return CasingClass::kStandard;
}

// Index of the sentence's first token that contains a letter, or -1.
int first_alphabetic_index(const Sentence& sentence) {
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (uni::has_letter(sentence.tokens[i])) return static_cast<int>(i);
  }
  return -1;
}

bool starts_with_upper(const std::string& token) {
  for (char32_t c : uni::decode_utf8(token)) {
    if (uni::is_letter(c)) return uni::is_upper_letter(c);
  }
  return false;
}

int first_non_quote_index(const Sentence& sentence) {
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    if (!is_quote_token(sentence.tokens[i])) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

std::pair<CasingClass, CasingClass> classify_casing(const Sentence& sentence,
                                                    const Span& span) {
  std::vector<TokenCase> outside;
  outside.reserve(sentence.tokens.size());
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const int idx = static_cast<int>(i);
    if (idx >= span.start && idx < span.end) continue;
    outside.push_back(token_case(sentence.tokens[i]));
  }

  CasingClass text = group_class(outside, /*single_upper_as_upper=*/true);
  if (text == CasingClass::kLower) {
    // The only capital a standard-cased sentence must carry is the
    // sentence-initial one. When that token sits inside the span, the
    // outside text cannot be told apart from standard casing, so a
    // capitalized span start keeps the text standard.
    const int first_alpha = first_alphabetic_index(sentence);
    if (first_alpha >= span.start && first_alpha < span.end &&
        starts_with_upper(sentence.tokens[first_alpha])) {
      text = CasingClass::kStandard;
    }
  }

  std::vector<TokenCase> inside;
  for (int i = span.start; i < span.end && i < static_cast<int>(sentence.tokens.size()); ++i) {
    inside.push_back(token_case(sentence.tokens[i]));
  }
  CasingClass span_casing =
      group_class(inside, /*single_upper_as_upper=*/text == CasingClass::kUpper);

  if (text == CasingClass::kStandard) {
    if (span_casing == CasingClass::kLower) {
      // Authored text: a lowercase span inside a standard sentence is the
      // baseline, not an explicit lowercase perturbation.
      span_casing = CasingClass::kStandard;
    } else if (span_casing == CasingClass::kTitle && span.length() == 1 &&
               span.start == first_non_quote_index(sentence)) {
      // The span's capital is the sentence-initial capital.
      span_casing = CasingClass::kStandard;
    }
  }
  return {text, span_casing};
}

AttributeProfile profile_span(const Sentence& sentence, const Span& span,
                              const ComplianceRules& rules,
                              const Lexicon& lexicon) {
  const bool known = std::find(sentence.spans.begin(), sentence.spans.end(),
                               span) != sentence.spans.end();
  if (!known) {
    throw ValidationError("span [" + std::to_string(span.start) + "," +
                          std::to_string(span.end) +
                          ") is not a span of the sentence");
  }

  std::vector<std::string> span_tokens(sentence.tokens.begin() + span.start,
                                       sentence.tokens.begin() + span.end);

  AttributeProfile p;
  p.length = span.length() == 1 ? LengthClass::kSingle : LengthClass::kMulti;
  p.shape = shape_class(span_tokens, rules);
  p.ambiguity = ambiguity_class(span_tokens, lexicon);
  p.position = span.start == first_non_quote_index(sentence)
                   ? SpanPosition::kInitial
                   : SpanPosition::kMid;

  p.quoted = false;
  if (span.start > 0 && span.end < static_cast<int>(sentence.tokens.size())) {
    p.quoted = is_quote_pair(sentence.tokens[span.start - 1],
                             sentence.tokens[span.end]);
  }

  p.adjacent = false;
  for (const Span& other : sentence.spans) {
    if (other == span) continue;
    if (other.end == span.start || other.start == span.end) {
      p.adjacent = true;
      break;
    }
  }

  std::tie(p.text_casing, p.span_casing) = classify_casing(sentence, span);
  return p;
}

std::string dim_name(Dim dim) {
  switch (dim) {
    case Dim::kType: return "type";
    case Dim::kShape: return "shape";
    case Dim::kLength: return "length";
    case Dim::kPosition: return "position";
    case Dim::kQuoted: return "quoted";
    case Dim::kCasing: return "casing";
    case Dim::kTextCasing: return "text_casing";
    case Dim::kSpanCasing: return "span_casing";
    case Dim::kAdjacent: return "adjacent";
    case Dim::kAmbiguity: return "ambiguity";
  }
  return "";
}

std::optional<Dim> dim_from_name(std::string_view name) {
  static constexpr std::array<Dim, 10> kAll = {
      Dim::kType,       Dim::kShape,      Dim::kLength,  Dim::kPosition,
      Dim::kQuoted,     Dim::kCasing,     Dim::kTextCasing,
      Dim::kSpanCasing, Dim::kAdjacent,   Dim::kAmbiguity,
  };
  for (Dim d : kAll) {
    if (dim_name(d) == name) return d;
  }
  return std::nullopt;
}

std::vector<Dim> parse_dims(std::string_view csv) {
  std::vector<Dim> dims;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view name = csv.substr(pos, comma - pos);
    if (!name.empty()) {
      auto dim = dim_from_name(name);
      if (!dim) {
        throw ValidationError("unknown dimension '" + std::string(name) + "'");
      }
      if (std::find(dims.begin(), dims.end(), *dim) != dims.end()) {
        throw ValidationError("duplicate dimension '" + std::string(name) + "'");
      }
      dims.push_back(*dim);
    }
    pos = comma + 1;
  }
  if (dims.empty()) throw ValidationError("empty dimension list");
  return dims;
}

std::string type_label(const AttributeProfile& profile) {
  if (profile.adjacent) return "adjacent";
  if (profile.ambiguity == AmbiguityClass::kAmbiguous) return "ambiguous";
  if (profile.ambiguity == AmbiguityClass::kMixedAmbiguous) {
    return "mixed_ambiguous";
  }
  return to_string(profile.shape);
}

std::string casing_label(const AttributeProfile& profile) {
  const CasingClass text = profile.text_casing;
  const CasingClass span = profile.span_casing;
  if (span == CasingClass::kUpper && text != CasingClass::kUpper) {
    return "span_upper";
  }
  if (span == CasingClass::kTitle && text != CasingClass::kTitle) {
    return "span_title";
  }
  if (text == CasingClass::kUpper) return "text_upper";
  if (text == CasingClass::kTitle) return "text_title";
  if (text == CasingClass::kLower) return "text_lower";
  return "standard";
}

std::string dim_value(const AttributeProfile& profile, Dim dim) {
  switch (dim) {
    case Dim::kType: return type_label(profile);
    case Dim::kShape: return to_string(profile.shape);
    case Dim::kLength: return to_string(profile.length);
    case Dim::kPosition: return to_string(profile.position);
    case Dim::kQuoted: return profile.quoted ? "quoted" : "unquoted";
    case Dim::kCasing: return casing_label(profile);
    case Dim::kTextCasing: return to_string(profile.text_casing);
    case Dim::kSpanCasing: return to_string(profile.span_casing);
    case Dim::kAdjacent: return profile.adjacent ? "adjacent" : "non_adjacent";
    case Dim::kAmbiguity: return to_string(profile.ambiguity);
  }
  return "";
}

}  // namespace spandiag
