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

#ifndef SPANDIAG_PERTURB_H_
#define SPANDIAG_PERTURB_H_

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "spandiag/attributes.h"
#include "spandiag/corpus.h"

namespace spandiag {

// The six casing perturbations: leave the text as authored, re-case the
// whole text, or re-case only the span tokens.
enum class CasingTransform {
  kStandard,
  kTextLower,
  kTextUpper,
  kTextTitle,
  kSpanUpper,
  kSpanTitle,
};

enum class QuoteMode { kUnquoted, kQuoted };

std::string to_string(CasingTransform t);
std::string to_string(QuoteMode m);
CasingTransform casing_transform_from_name(std::string_view name);
QuoteMode quote_mode_from_name(std::string_view name);

// One of the 12 casing x quotation configurations.
struct PerturbConfig {
  CasingTransform casing = CasingTransform::kStandard;
  QuoteMode quotes = QuoteMode::kUnquoted;

  // "standard-unquoted", "text_lower-quoted", ...
  std::string id() const;
  int index() const;  // 0..11, casing-major

  friend bool operator==(const PerturbConfig&, const PerturbConfig&) = default;
};

constexpr int kConfigCount = 12;
std::array<PerturbConfig, kConfigCount> all_configs();

// Re-cases tokens without touching token count, span offsets or
// non-alphabetic tokens. kStandard is the identity.
Sentence apply_casing(const Sentence& s, CasingTransform t);

// kQuoted inserts a straight-quote token before and after every span and
// shifts offsets; kUnquoted removes the matching quote pair immediately
// around each span (a no-op for spans that are not quoted). The two are
// mutually inverse. Adjacent spans are quoted independently, which yields
// back-to-back quote tokens; that case sets meta["quote_collision"].
Sentence apply_quotes(const Sentence& s, QuoteMode mode);

// Declared attribute hints for one authored sentence: the values of the
// `type`, `length` and `position` dimensions its spans are meant to have.
struct SeedTags {
  std::string type;
  std::string length;
  std::string position;
};

struct SeedSentence {
  std::string id;
  Sentence sentence;
  SeedTags tags;
};

// Checks the declared hints against computed profiles. For multi-span seeds
// `type` and `position` must hold for the first span and `type` for all;
// length `multi` means at least one span is multiword, `single` means all
// are. Throws ValidationError naming the seed and the disagreeing attribute.
void validate_seed(const SeedSentence& seed, const ComplianceRules& rules,
                   const Lexicon& lexicon);

// All 12 perturbed variants of a validated seed, in configuration order.
// Casing is applied before quote insertion so quote tokens are never
// re-cased. Each variant's meta records the seed id, configuration id and
// the seed's declared tags.
std::vector<std::pair<PerturbConfig, Sentence>> expand(const SeedSentence& seed);

// Validates every seed, expands each one, and concatenates the variants in
// (seed, configuration) order: |seeds| x 12 sentences.
Dataset build_suite(const std::vector<SeedSentence>& seeds,
                    const ComplianceRules& rules, const Lexicon& lexicon);

// Reads seeds from a BIO file plus a JSON sidecar: an array with one
// {"type","length","position"} object per sentence (optional "id").
std::vector<SeedSentence> load_seeds(const std::string& bio_path,
                                     const std::string& meta_path);

}  // namespace spandiag

#endif  // SPANDIAG_PERTURB_H_
