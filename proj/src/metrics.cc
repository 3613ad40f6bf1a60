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

#include "spandiag/metrics.h"

#include <algorithm>
#include <set>

namespace spandiag {

namespace {

double ratio(std::int64_t num, std::int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double harmonic(double p, double r) {
  return (p + r) == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

}  // namespace

ScoreSummary summarize(const ConfusionCounts& counts) {
  ScoreSummary s;
  s.precision = ratio(counts.tp, counts.tp + counts.fp);
  s.recall = ratio(counts.tp, counts.tp + counts.fn);
  s.f1 = harmonic(s.precision, s.recall);
  s.support = counts.tp + counts.fn;
  return s;
}

ConfusionCounts span_counts(const std::vector<Span>& gold,
                            const std::vector<Span>& pred) {
  ConfusionCounts c;
  for (const Span& g : gold) {
    if (std::find(pred.begin(), pred.end(), g) != pred.end()) {
      ++c.tp;
    } else {
      ++c.fn;
    }
  }
  for (const Span& p : pred) {
    if (std::find(gold.begin(), gold.end(), p) == gold.end()) ++c.fp;
  }
  return c;
}

std::pair<ConfusionCounts, ScoreSummary> span_scores(
    const std::vector<Span>& gold, const std::vector<Span>& pred) {
  const ConfusionCounts c = span_counts(gold, pred);
  return {c, summarize(c)};
}

namespace {

// Positive slot set of a span list: token slot i -> 2i, separator between
// i and i+1 -> 2i+1. Separators are positive only inside a span.
std::set<int> positive_slots(const std::vector<Span>& spans) {
  std::set<int> slots;
  for (const Span& s : spans) {
    for (int i = s.start; i < s.end; ++i) {
      slots.insert(2 * i);
      if (i + 1 < s.end) slots.insert(2 * i + 1);
    }
  }
  return slots;
}

}  // namespace

ConfusionCounts token_separator_counts(const std::vector<Span>& gold,
                                       const std::vector<Span>& pred,
                                       std::size_t n_tokens) {
  if (n_tokens == 0) return ConfusionCounts{};
  const std::set<int> g = positive_slots(gold);
  const std::set<int> p = positive_slots(pred);
  ConfusionCounts c;
  for (int slot : g) {
    if (p.count(slot)) {
      ++c.tp;
    } else {
      ++c.fn;
    }
  }
  for (int slot : p) {
    if (!g.count(slot)) ++c.fp;
  }
  return c;
}

ScoreSummary token_separator_scores(const std::vector<Span>& gold,
                                    const std::vector<Span>& pred,
                                    std::size_t n_tokens) {
  return summarize(token_separator_counts(gold, pred, n_tokens));
}

std::vector<ErrorCategory> classify_gold_spans(const std::vector<Span>& gold,
                                               const std::vector<Span>& pred) {
  std::vector<ErrorCategory> categories(gold.size(), ErrorCategory::kMissed);

  // Overlapping predictions per gold, and overlapping golds per prediction.
  std::vector<std::vector<std::size_t>> preds_of_gold(gold.size());
  std::vector<std::vector<std::size_t>> golds_of_pred(pred.size());
  for (std::size_t gi = 0; gi < gold.size(); ++gi) {
    for (std::size_t pi = 0; pi < pred.size(); ++pi) {
      if (gold[gi].overlaps(pred[pi])) {
        preds_of_gold[gi].push_back(pi);
        golds_of_pred[pi].push_back(gi);
      }
    }
  }

  for (std::size_t gi = 0; gi < gold.size(); ++gi) {
    const auto& ps = preds_of_gold[gi];
    if (std::find(pred.begin(), pred.end(), gold[gi]) != pred.end()) {
      categories[gi] = ErrorCategory::kCorrect;
    } else if (ps.size() == 1 && golds_of_pred[ps.front()].size() > 1) {
      categories[gi] = ErrorCategory::kFused;
    } else if (ps.size() >= 2) {
      categories[gi] = ErrorCategory::kSplit;
    } else if (ps.size() == 1) {
      categories[gi] = ErrorCategory::kBoundary;
    }
  }
  return categories;
}

ErrorTypology classify_errors(const std::vector<Span>& gold,
                              const std::vector<Span>& pred) {
  ErrorTypology t;
  for (ErrorCategory c : classify_gold_spans(gold, pred)) {
    switch (c) {
      case ErrorCategory::kCorrect: ++t.correct; break;
      case ErrorCategory::kMissed: ++t.missed; break;
      case ErrorCategory::kBoundary: ++t.boundary; break;
      case ErrorCategory::kFused: ++t.fused; break;
      case ErrorCategory::kSplit: ++t.split; break;
    }
  }
  for (const Span& p : pred) {
    const bool touches_gold = std::any_of(
        gold.begin(), gold.end(),
        [&](const Span& g) { return g.overlaps(p); });
    if (!touches_gold) ++t.spurious;
  }
  return t;
}

ScoreSummary aggregate(const std::vector<ConfusionCounts>& per_sentence) {
  ConfusionCounts total;
  for (const ConfusionCounts& c : per_sentence) total += c;
  return summarize(total);
}

ScoreSummary aggregate_macro(const std::vector<ConfusionCounts>& per_sentence) {
  if (per_sentence.empty()) return ScoreSummary{};
  double p_sum = 0.0, r_sum = 0.0;
  std::int64_t support = 0;
  for (const ConfusionCounts& c : per_sentence) {
    const ScoreSummary s = summarize(c);
    p_sum += s.precision;
    r_sum += s.recall;
    support += s.support;
  }
  ScoreSummary out;
  out.precision = p_sum / static_cast<double>(per_sentence.size());
  out.recall = r_sum / static_cast<double>(per_sentence.size());
  out.f1 = harmonic(out.precision, out.recall);
  out.support = support;
  return out;
}

ConfusionCounts dataset_span_counts(const Dataset& gold, const Dataset& pred) {
  ConfusionCounts total;
  const std::size_t n = std::min(gold.sentences.size(), pred.sentences.size());
  for (std::size_t i = 0; i < n; ++i) {
    total += span_counts(gold.sentences[i].spans, pred.sentences[i].spans);
  }
  return total;
}

ScoreSummary dataset_token_separator_scores(const Dataset& gold,
                                            const Dataset& pred) {
  ConfusionCounts total;
  const std::size_t n = std::min(gold.sentences.size(), pred.sentences.size());
  for (std::size_t i = 0; i < n; ++i) {
    total += token_separator_counts(gold.sentences[i].spans,
                                    pred.sentences[i].spans,
                                    gold.sentences[i].tokens.size());
  }
  return summarize(total);
}

ErrorTypology dataset_typology(const Dataset& gold, const Dataset& pred) {
  ErrorTypology total;
  const std::size_t n = std::min(gold.sentences.size(), pred.sentences.size());
  for (std::size_t i = 0; i < n; ++i) {
    total += classify_errors(gold.sentences[i].spans, pred.sentences[i].spans);
  }
  return total;
}

}  // namespace spandiag
