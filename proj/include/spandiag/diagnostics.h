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

#ifndef SPANDIAG_DIAGNOSTICS_H_
#define SPANDIAG_DIAGNOSTICS_H_

#include <map>
#include <string>
#include <vector>

#include "spandiag/attributes.h"
#include "spandiag/corpus.h"
#include "spandiag/metrics.h"

namespace spandiag {

// Values of a profile projected onto a dimension list, in dim order.
using SliceKey = std::vector<std::string>;

std::string slice_key_to_string(const std::vector<Dim>& dims,
                                const SliceKey& key);

struct SliceCell {
  ConfusionCounts counts;
  ErrorTypology typology;
};

// Attribute-sliced scores. Every gold span lands in exactly one row (its
// profile projected onto `dims`); rows never have zero support. Predictions
// that match or overlap a gold span count in that span's row; the rest are
// pooled in `spurious_fp`, which keeps row sums equal to corpus totals.
struct SliceReport {
  std::vector<Dim> dims;
  std::map<SliceKey, SliceCell> rows;
  std::int64_t spurious_fp = 0;

  ConfusionCounts totals() const;
};

// Throws AlignmentError naming the first sentence whose tokens differ.
void check_aligned(const Dataset& a, const Dataset& b);

SliceReport slice_scores(const Dataset& gold, const Dataset& pred,
                         const std::vector<Dim>& dims,
                         const ComplianceRules& rules, const Lexicon& lexicon);

// Cohen's kappa over aligned token tags. By default tokens are collapsed to
// inside-a-span vs outside; with full_tagset the B-/I-/O tag alphabet is
// compared instead. Two identical constant annotations have kappa 1 by
// convention.
double cohen_kappa_tokens(const Dataset& a, const Dataset& b,
                          bool full_tagset = false);

// Exact-match span F1 between two annotations of the same text; symmetric
// in its arguments.
double pairwise_span_f1(const Dataset& a, const Dataset& b);

struct AgreementReport {
  double kappa_token = 0.0;
  double pairwise_f1_span = 0.0;
};

AgreementReport agreement(const Dataset& a, const Dataset& b,
                          bool full_tagset = false);

}  // namespace spandiag

#endif  // SPANDIAG_DIAGNOSTICS_H_
