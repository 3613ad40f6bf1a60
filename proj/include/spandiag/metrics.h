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

#ifndef SPANDIAG_METRICS_H_
#define SPANDIAG_METRICS_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "spandiag/corpus.h"

namespace spandiag {

struct ConfusionCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  ConfusionCounts& operator+=(const ConfusionCounts& other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    return *this;
  }
  friend bool operator==(const ConfusionCounts&,
                         const ConfusionCounts&) = default;
};

// Precision/recall/F1 with the 0/0 -> 0 convention; f1 is the harmonic mean
// of precision and recall. support is the number of gold items.
struct ScoreSummary {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::int64_t support = 0;
};

ScoreSummary summarize(const ConfusionCounts& counts);

// Counts over gold spans (correct..split partition the gold set) plus
// spurious, which counts predictions overlapping no gold span.
//   correct  - exact (start, end, label) match
//   fused    - its only overlapping prediction also overlaps another gold
//   split    - overlapped by two or more predictions
//   boundary - overlapped by exactly one prediction, inexactly
//   missed   - overlapped by nothing
// The order above is the precedence used when several descriptions apply.
struct ErrorTypology {
  std::int64_t correct = 0;
  std::int64_t missed = 0;
  std::int64_t spurious = 0;
  std::int64_t boundary = 0;
  std::int64_t fused = 0;
  std::int64_t split = 0;

  ErrorTypology& operator+=(const ErrorTypology& other) {
    correct += other.correct;
    missed += other.missed;
    spurious += other.spurious;
    boundary += other.boundary;
    fused += other.fused;
    split += other.split;
    return *this;
  }
  std::int64_t gold_total() const {
    return correct + missed + boundary + fused + split;
  }
  friend bool operator==(const ErrorTypology&, const ErrorTypology&) = default;
};

// Exact-match span scoring within one sentence: tp are (start, end, label)
// matches, everything else fp/fn.
ConfusionCounts span_counts(const std::vector<Span>& gold,
                            const std::vector<Span>& pred);
std::pair<ConfusionCounts, ScoreSummary> span_scores(
    const std::vector<Span>& gold, const std::vector<Span>& pred);

// Token-and-separator scoring: n token slots plus n-1 separator slots; a
// token slot is positive inside a span, a separator slot is positive when
// both of its neighbors are inside the same span. Partial-credit companion
// to exact span matching. support is the number of gold-positive slots.
ConfusionCounts token_separator_counts(const std::vector<Span>& gold,
                                       const std::vector<Span>& pred,
                                       std::size_t n_tokens);
ScoreSummary token_separator_scores(const std::vector<Span>& gold,
                                    const std::vector<Span>& pred,
                                    std::size_t n_tokens);

ErrorTypology classify_errors(const std::vector<Span>& gold,
                              const std::vector<Span>& pred);

// Per-gold-span error categories, aligned with `gold`; used by slicing to
// attribute categories to attribute buckets.
enum class ErrorCategory { kCorrect, kMissed, kBoundary, kFused, kSplit };
std::vector<ErrorCategory> classify_gold_spans(const std::vector<Span>& gold,
                                               const std::vector<Span>& pred);

// Micro aggregation: sum counts, then score.
ScoreSummary aggregate(const std::vector<ConfusionCounts>& per_sentence);
// Macro aggregation: mean precision and recall over the entries, f1 as their
// harmonic mean, support summed.
ScoreSummary aggregate_macro(const std::vector<ConfusionCounts>& per_sentence);

// Dataset-level conveniences over aligned gold/pred (throws AlignmentError
// via the caller's alignment check when sizes differ).
ConfusionCounts dataset_span_counts(const Dataset& gold, const Dataset& pred);
ScoreSummary dataset_token_separator_scores(const Dataset& gold,
                                            const Dataset& pred);
ErrorTypology dataset_typology(const Dataset& gold, const Dataset& pred);

}  // namespace spandiag

#endif  // SPANDIAG_METRICS_H_
