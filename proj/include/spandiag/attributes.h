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

#ifndef SPANDIAG_ATTRIBUTES_H_
#define SPANDIAG_ATTRIBUTES_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "spandiag/corpus.h"

namespace spandiag {

// Graphotactic expectations of the recipient language, as letter patterns.
// A word is non-compliant when any pattern matches it (case-insensitive,
// non-letters stripped first). Patterns are not hard-coded per language;
// they come from user configuration.
struct ComplianceRules {
  std::vector<std::string> forbidden_onsets;   // word-initial patterns
  std::vector<std::string> forbidden_codas;    // word-final patterns
  std::vector<std::string> forbidden_infixes;  // anywhere patterns
  std::vector<std::string> foreign_chars;      // single letters, UTF-8

  // Throws ValidationError if a pattern is empty or not letters-only.
  void validate() const;
};

// Native wordforms of the recipient language, lowercase. A span token whose
// lowercase form is in the lexicon also exists as a native word, which makes
// the span prone to label mismatch.
struct Lexicon {
  std::unordered_set<std::string> entries;

  bool contains(std::string_view wordform_lower) const {
    return entries.count(std::string(wordform_lower)) > 0;
  }
};

enum class Compliance { kCompliant, kNonCompliant };
enum class LengthClass { kSingle, kMulti };
enum class ShapeClass { kCompliant, kNonCompliant, kMixedCompliant };
enum class SpanPosition { kInitial, kMid };
enum class CasingClass { kStandard, kLower, kUpper, kTitle };
enum class AmbiguityClass { kUnambiguous, kAmbiguous, kMixedAmbiguous };

std::string to_string(LengthClass v);
std::string to_string(ShapeClass v);
std::string to_string(SpanPosition v);
std::string to_string(CasingClass v);
std::string to_string(AmbiguityClass v);

// The per-span diagnostic attribute vector. Single-token spans are never
// mixed_compliant or mixed_ambiguous.
struct AttributeProfile {
  LengthClass length = LengthClass::kSingle;
  ShapeClass shape = ShapeClass::kCompliant;
  SpanPosition position = SpanPosition::kMid;
  bool quoted = false;
  CasingClass text_casing = CasingClass::kStandard;
  CasingClass span_casing = CasingClass::kStandard;
  bool adjacent = false;
  AmbiguityClass ambiguity = AmbiguityClass::kUnambiguous;

  friend bool operator==(const AttributeProfile&,
                         const AttributeProfile&) = default;
};

// True for the recognized quotation-mark tokens: straight " and ', curly
// one-character quotes and guillemets.
bool is_quote_token(std::string_view token);

// True when `open` + `close` form a sensible quotation pair. Straight quotes
// pair with themselves.
bool is_quote_pair(std::string_view open, std::string_view close);

// Non-compliant iff any rule pattern matches the word (case-insensitive,
// letters only). A word that is empty after stripping non-letters is
// vacuously compliant.
Compliance check_compliance(std::string_view word, const ComplianceRules& rules);

// Compliant/non-compliant if all tokens agree, mixed otherwise.
ShapeClass shape_class(const std::vector<std::string>& span_tokens,
                       const ComplianceRules& rules);

// Ambiguous if every token exists in the lexicon, unambiguous if none does,
// mixed otherwise.
AmbiguityClass ambiguity_class(const std::vector<std::string>& span_tokens,
                               const Lexicon& lexicon);

// Casing of the sentence outside the span and of the span itself.
//
// The raw classes are: lower (all letters lowercase), upper (all uppercase),
// title (every alphabetic token capitalized), standard (anything else).
// Two adjustments keep authored standard-casing text classified as standard:
//  - text: if every token outside the span is lowercase but the sentence's
//    first alphabetic token sits inside the span and starts with a capital,
//    the outside text is standard, not lowercase;
//  - span: a lowercase span under standard text is standard, and so is a
//    single-token capitalized span that begins the sentence under standard
//    text (its capital is the sentence-initial one).
// Single-letter tokens are case-ambiguous; they count as upper only when the
// surrounding text is uppercase and as titlecase otherwise.
std::pair<CasingClass, CasingClass> classify_casing(const Sentence& sentence,
                                                    const Span& span);

// Full attribute vector for one span of `sentence`. Position is the index of
// the first non-quote token (quote tokens are transparent for position);
// quoted means the tokens immediately before and after the span are a
// matching quotation pair; adjacent means another span of the same sentence
// starts at this span's end or ends at its start.
// Throws ValidationError if `span` is not one of the sentence's spans.
AttributeProfile profile_span(const Sentence& sentence, const Span& span,
                              const ComplianceRules& rules,
                              const Lexicon& lexicon);

// -- Slicing dimensions -----------------------------------------------------

// The dimensions a profile can be projected onto. kType and kCasing are
// derived: kType folds adjacency, ambiguity and shape into the single
// taxonomy used for reporting (adjacent > ambiguous/mixed_ambiguous > shape),
// and kCasing folds the two casing classes into the six perturbation-style
// labels (standard, text_lower, text_upper, text_title, span_upper,
// span_title).
enum class Dim {
  kType,
  kShape,
  kLength,
  kPosition,
  kQuoted,
  kCasing,
  kTextCasing,
  kSpanCasing,
  kAdjacent,
  kAmbiguity,
};

std::string dim_name(Dim dim);
std::optional<Dim> dim_from_name(std::string_view name);

// Parses a comma-separated dimension list, e.g. "type,length,position".
// Throws ValidationError on an unknown name or duplicate.
std::vector<Dim> parse_dims(std::string_view csv);

std::string type_label(const AttributeProfile& profile);
std::string casing_label(const AttributeProfile& profile);
std::string dim_value(const AttributeProfile& profile, Dim dim);

}  // namespace spandiag

#endif  // SPANDIAG_ATTRIBUTES_H_
