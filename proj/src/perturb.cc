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

#include "spandiag/perturb.h"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

#include "spandiag/bio.h"
#include "spandiag/unicode.h"

namespace spandiag {

namespace {

constexpr char kQuoteGlyph[] = "\"";

bool in_any_span(const std::vector<Span>& spans, int idx) {
  for (const Span& s : spans) {
    if (idx >= s.start && idx < s.end) return true;
  }
  return false;
}

}  // namespace

std::string to_string(CasingTransform t) {
  switch (t) {
    case CasingTransform::kStandard: return "standard";
    case CasingTransform::kTextLower: return "text_lower";
    case CasingTransform::kTextUpper: return "text_upper";
    case CasingTransform::kTextTitle: return "text_title";
    case CasingTransform::kSpanUpper: return "span_upper";
    case CasingTransform::kSpanTitle: return "span_title";
  }
  return "";
}

std::string to_string(QuoteMode m) {
  return m == QuoteMode::kQuoted ? "quoted" : "unquoted";
}

CasingTransform casing_transform_from_name(std::string_view name) {
  for (CasingTransform t :
       {CasingTransform::kStandard, CasingTransform::kTextLower,
        CasingTransform::kTextUpper, CasingTransform::kTextTitle,
        CasingTransform::kSpanUpper, CasingTransform::kSpanTitle}) {
    if (to_string(t) == name) return t;
  }
  throw ValidationError("unknown casing transform '" + std::string(name) + "'");
}

QuoteMode quote_mode_from_name(std::string_view name) {
  if (name == "quoted") return QuoteMode::kQuoted;
  if (name == "unquoted") return QuoteMode::kUnquoted;
  throw ValidationError("unknown quote mode '" + std::string(name) + "'");
}

std::string PerturbConfig::id() const {
  return to_string(casing) + "-" + to_string(quotes);
}

int PerturbConfig::index() const {
  return static_cast<int>(casing) * 2 +
         (quotes == QuoteMode::kQuoted ? 1 : 0);
}

std::array<PerturbConfig, kConfigCount> all_configs() {
  std::array<PerturbConfig, kConfigCount> configs;
  int i = 0;
  for (CasingTransform t :
       {CasingTransform::kStandard, CasingTransform::kTextLower,
        CasingTransform::kTextUpper, CasingTransform::kTextTitle,
        CasingTransform::kSpanUpper, CasingTransform::kSpanTitle}) {
    for (QuoteMode m : {QuoteMode::kUnquoted, QuoteMode::kQuoted}) {
      configs[i++] = PerturbConfig{t, m};
    }
  }
  return configs;
}

Sentence apply_casing(const Sentence& s, CasingTransform t) {
  if (t == CasingTransform::kStandard) return s;

  const bool span_only =
      t == CasingTransform::kSpanUpper || t == CasingTransform::kSpanTitle;
  Sentence out = s;
  for (std::size_t i = 0; i < out.tokens.size(); ++i) {
    if (!uni::has_letter(out.tokens[i])) continue;
    if (span_only && !in_any_span(out.spans, static_cast<int>(i))) continue;
    switch (t) {
      case CasingTransform::kTextLower:
        out.tokens[i] = uni::lower(out.tokens[i]);
        break;
      case CasingTransform::kTextUpper:
      case CasingTransform::kSpanUpper:
        out.tokens[i] = uni::upper(out.tokens[i]);
        break;
      case CasingTransform::kTextTitle:
      case CasingTransform::kSpanTitle:
        out.tokens[i] = uni::title(out.tokens[i]);
        break;
      default:
        break;
    }
  }
  return out;
}

Sentence apply_quotes(const Sentence& s, QuoteMode mode) {
  if (mode == QuoteMode::kQuoted) {
    Sentence out;
    out.meta = s.meta;
    bool collision = false;
    for (std::size_t k = 0; k + 1 < s.spans.size(); ++k) {
      if (s.spans[k].end == s.spans[k + 1].start) collision = true;
    }
    if (collision) out.meta["quote_collision"] = "adjacent_spans";

    std::size_t k = 0;
    for (int i = 0; i < static_cast<int>(s.tokens.size()); ++i) {
      if (k < s.spans.size() && s.spans[k].start == i) {
        out.tokens.push_back(kQuoteGlyph);
      }
      out.tokens.push_back(s.tokens[i]);
      if (k < s.spans.size() && s.spans[k].end == i + 1) {
        out.tokens.push_back(kQuoteGlyph);
        ++k;
      }
    }
    // Span j gains one opening quote of its own plus a pair per span before
    // it: both offsets shift by 2j + 1.
    for (std::size_t j = 0; j < s.spans.size(); ++j) {
      const int shift = static_cast<int>(2 * j + 1);
      out.spans.push_back(Span{s.spans[j].start + shift,
                               s.spans[j].end + shift, s.spans[j].label});
    }
    out.validate();
    return out;
  }

  // kUnquoted: drop the matching quote pair directly around each span.
  std::vector<bool> drop(s.tokens.size(), false);
  for (const Span& span : s.spans) {
    if (span.start > 0 && span.end < static_cast<int>(s.tokens.size()) &&
        is_quote_pair(s.tokens[span.start - 1], s.tokens[span.end])) {
      drop[span.start - 1] = true;
      drop[span.end] = true;
    }
  }
  Sentence out;
  out.meta = s.meta;
  out.meta.erase("quote_collision");
  std::vector<int> new_index(s.tokens.size() + 1, 0);
  int kept = 0;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    new_index[i] = kept;
    if (!drop[i]) {
      out.tokens.push_back(s.tokens[i]);
      ++kept;
    }
  }
  new_index[s.tokens.size()] = kept;
  for (const Span& span : s.spans) {
    out.spans.push_back(
        Span{new_index[span.start], new_index[span.end], span.label});
  }
  out.validate();
  return out;
}

void validate_seed(const SeedSentence& seed, const ComplianceRules& rules,
                   const Lexicon& lexicon) {
  seed.sentence.validate();
  if (seed.sentence.spans.empty()) {
    throw ValidationError("seed '" + seed.id + "': no spans");
  }

  auto fail = [&](const std::string& attribute, const std::string& declared,
                  const std::string& computed) {
    throw ValidationError("seed '" + seed.id + "': declared " + attribute +
                          " '" + declared + "' but computed '" + computed +
                          "'");
  };

  std::vector<AttributeProfile> profiles;
  for (const Span& span : seed.sentence.spans) {
    profiles.push_back(profile_span(seed.sentence, span, rules, lexicon));
  }

  for (const AttributeProfile& p : profiles) {
    const std::string computed_type = type_label(p);
    if (computed_type != seed.tags.type) {
      fail("type", seed.tags.type, computed_type);
    }
  }

  bool any_multi = false, all_single = true;
  for (const AttributeProfile& p : profiles) {
    if (p.length == LengthClass::kMulti) {
      any_multi = true;
      all_single = false;
    }
  }
  if (seed.tags.length == "single" && !all_single) {
    fail("length", seed.tags.length, "multi");
  } else if (seed.tags.length == "multi" && !any_multi) {
    fail("length", seed.tags.length, "single");
  } else if (seed.tags.length != "single" && seed.tags.length != "multi") {
    throw ValidationError("seed '" + seed.id + "': bad length tag '" +
                          seed.tags.length + "'");
  }

  const std::string computed_position = to_string(profiles.front().position);
  if (seed.tags.position != computed_position) {
    fail("position", seed.tags.position, computed_position);
  }
}

std::vector<std::pair<PerturbConfig, Sentence>> expand(
    const SeedSentence& seed) {
  std::vector<std::pair<PerturbConfig, Sentence>> out;
  out.reserve(kConfigCount);
  for (const PerturbConfig& config : all_configs()) {
    Sentence variant =
        apply_quotes(apply_casing(seed.sentence, config.casing), config.quotes);
    variant.meta["seed"] = seed.id;
    variant.meta["config"] = config.id();
    variant.meta["type"] = seed.tags.type;
    variant.meta["length"] = seed.tags.length;
    variant.meta["position"] = seed.tags.position;
    out.emplace_back(config, std::move(variant));
  }
  return out;
}

Dataset build_suite(const std::vector<SeedSentence>& seeds,
                    const ComplianceRules& rules, const Lexicon& lexicon) {
  Dataset suite;
  suite.name = "suite";
  for (const SeedSentence& seed : seeds) {
    validate_seed(seed, rules, lexicon);
    for (auto& [config, sentence] : expand(seed)) {
      suite.sentences.push_back(std::move(sentence));
    }
  }
  return suite;
}

std::vector<SeedSentence> load_seeds(const std::string& bio_path,
                                     const std::string& meta_path) {
  const BioParseResult parsed =
      parse_bio_file(bio_path, BioParseOptions{.strict = true});

  std::ifstream meta_in(meta_path);
  if (!meta_in) throw ParseError("cannot open '" + meta_path + "'");
  nlohmann::json meta;
  try {
    meta_in >> meta;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("bad seed metadata '" + meta_path + "': " + e.what());
  }
  if (!meta.is_array() ||
      meta.size() != parsed.dataset.sentences.size()) {
    throw ParseError("seed metadata '" + meta_path + "' must be an array with " +
                     std::to_string(parsed.dataset.sentences.size()) +
                     " entries");
  }

  std::vector<SeedSentence> seeds;
  seeds.reserve(meta.size());
  for (std::size_t i = 0; i < meta.size(); ++i) {
    const nlohmann::json& entry = meta[i];
    if (!entry.is_object() || !entry.contains("type") ||
        !entry.contains("length") || !entry.contains("position")) {
      throw ParseError("seed metadata entry " + std::to_string(i) +
                       " needs 'type', 'length' and 'position'");
    }
    SeedSentence seed;
    seed.id = entry.value("id", "seed-" + std::to_string(i));
    seed.sentence = parsed.dataset.sentences[i];
    seed.tags = SeedTags{entry["type"].get<std::string>(),
                         entry["length"].get<std::string>(),
                         entry["position"].get<std::string>()};
    seeds.push_back(std::move(seed));
  }
  return seeds;
}

}  // namespace spandiag
