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

#include "spandiag/diagnostics.h"

#include <algorithm>
#include <map>

namespace spandiag {

std::string slice_key_to_string(const std::vector<Dim>& dims,
                                const SliceKey& key) {
  std::string out;
  for (std::size_t i = 0; i < dims.size() && i < key.size(); ++i) {
    if (i > 0) out += " ";
    out += dim_name(dims[i]) + "=" + key[i];
  }
  return out;
}

ConfusionCounts SliceReport::totals() const {
  ConfusionCounts total;
  for (const auto& [key, cell] : rows) total += cell.counts;
  total.fp += spurious_fp;
  return total;
}

void check_aligned(const Dataset& a, const Dataset& b) {
  if (a.sentences.size() != b.sentences.size()) {
    throw AlignmentError("datasets have " + std::to_string(a.sentences.size()) +
                         " vs " + std::to_string(b.sentences.size()) +
                         " sentences");
  }
  for (std::size_t i = 0; i < a.sentences.size(); ++i) {
    if (a.sentences[i].tokens != b.sentences[i].tokens) {
      throw AlignmentError("token mismatch at sentence " + std::to_string(i));
    }
  }
}

SliceReport slice_scores(const Dataset& gold, const Dataset& pred,
                         const std::vector<Dim>& dims,
                         const ComplianceRules& rules, const Lexicon& lexicon) {
  check_aligned(gold, pred);

  SliceReport report;
  report.dims = dims;

  auto project = [&](const AttributeProfile& profile) {
    SliceKey key;
    key.reserve(dims.size());
    for (Dim d : dims) key.push_back(dim_value(profile, d));
    return key;
  };

  for (std::size_t si = 0; si < gold.sentences.size(); ++si) {
    const Sentence& gs = gold.sentences[si];
    const Sentence& ps = pred.sentences[si];

    std::vector<SliceKey> keys;
    keys.reserve(gs.spans.size());
    for (const Span& span : gs.spans) {
      keys.push_back(project(profile_span(gs, span, rules, lexicon)));
    }

    const std::vector<ErrorCategory> categories =
        classify_gold_spans(gs.spans, ps.spans);

    for (std::size_t gi = 0; gi < gs.spans.size(); ++gi) {
      SliceCell& cell = report.rows[keys[gi]];
      switch (categories[gi]) {
        case ErrorCategory::kCorrect:
          ++cell.counts.tp;
          ++cell.typology.correct;
          break;
        case ErrorCategory::kMissed:
          ++cell.counts.fn;
          ++cell.typology.missed;
          break;
        case ErrorCategory::kBoundary:
          ++cell.counts.fn;
          ++cell.typology.boundary;
          break;
        case ErrorCategory::kFused:
          ++cell.counts.fn;
          ++cell.typology.fused;
          break;
        case ErrorCategory::kSplit:
          ++cell.counts.fn;
          ++cell.typology.split;
          break;
      }
    }

    // Attribute each non-exact prediction to the first gold span it
    // overlaps; predictions touching no gold go to the spurious pool.
    for (const Span& p : ps.spans) {
      if (std::find(gs.spans.begin(), gs.spans.end(), p) != gs.spans.end()) {
        continue;  // exact match, already counted as that gold's tp
      }
      bool attributed = false;
      for (std::size_t gi = 0; gi < gs.spans.size(); ++gi) {
        if (gs.spans[gi].overlaps(p)) {
          ++report.rows[keys[gi]].counts.fp;
          attributed = true;
          break;
        }
      }
      if (!attributed) ++report.spurious_fp;
    }
  }
  return report;
}

namespace {

// Tag category per token, pooled across the dataset.
std::vector<std::string> token_categories(const Dataset& d, bool full_tagset) {
  std::vector<std::string> cats;
  for (const Sentence& s : d.sentences) {
    if (full_tagset) {
      const std::vector<std::string> tags =
          tags_from_spans(s.tokens.size(), s.spans);
      cats.insert(cats.end(), tags.begin(), tags.end());
    } else {
      std::vector<std::string> inside(s.tokens.size(), "out");
      for (const Span& span : s.spans) {
        for (int i = span.start; i < span.end; ++i) inside[i] = "in";
      }
      cats.insert(cats.end(), inside.begin(), inside.end());
    }
  }
  return cats;
}

}  // namespace

double cohen_kappa_tokens(const Dataset& a, const Dataset& b,
                          bool full_tagset) {
  check_aligned(a, b);
  const std::vector<std::string> ca = token_categories(a, full_tagset);
  const std::vector<std::string> cb = token_categories(b, full_tagset);
  const std::size_t n = ca.size();
  if (n == 0) return 1.0;

  std::map<std::string, std::int64_t> marg_a, marg_b;
  std::int64_t agree = 0;
  for (std::size_t i = 0; i < n; ++i) {
    ++marg_a[ca[i]];
    ++marg_b[cb[i]];
    if (ca[i] == cb[i]) ++agree;
  }
  const double p_o = static_cast<double>(agree) / static_cast<double>(n);
  double p_e = 0.0;
  for (const auto& [cat, count_a] : marg_a) {
    auto it = marg_b.find(cat);
    if (it == marg_b.end()) continue;
    p_e += (static_cast<double>(count_a) / n) *
           (static_cast<double>(it->second) / n);
  }
  if (p_e >= 1.0) {
    // Both annotators constant and equal: perfect trivial agreement.
    return 1.0;
  }
  return (p_o - p_e) / (1.0 - p_e);
}

double pairwise_span_f1(const Dataset& a, const Dataset& b) {
  check_aligned(a, b);
  ConfusionCounts total;
  for (std::size_t i = 0; i < a.sentences.size(); ++i) {
    total += span_counts(a.sentences[i].spans, b.sentences[i].spans);
  }
  return summarize(total).f1;
}

AgreementReport agreement(const Dataset& a, const Dataset& b,
                          bool full_tagset) {
  return AgreementReport{cohen_kappa_tokens(a, b, full_tagset),
                         pairwise_span_f1(a, b)};
}

}  // namespace spandiag
