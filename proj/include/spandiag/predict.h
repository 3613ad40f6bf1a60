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

#ifndef SPANDIAG_PREDICT_H_
#define SPANDIAG_PREDICT_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spandiag/attributes.h"
#include "spandiag/corpus.h"
#include "spandiag/diagnostics.h"

namespace spandiag {

// Recall a system obtained on each attribute-type bucket of a benchmark.
// tp and support are kept as integers so coarse projections can be
// re-aggregated exactly.
struct TypeRecallRow {
  std::int64_t tp = 0;
  std::int64_t support = 0;

  double recall() const {
    return support == 0 ? 0.0
                        : static_cast<double>(tp) / static_cast<double>(support);
  }
};

struct TypeRecallTable {
  std::vector<Dim> dims;
  std::map<SliceKey, TypeRecallRow> rows;

  std::int64_t total_tp() const;
  std::int64_t total_support() const;
  double overall_recall() const;
};

// Exact-match recall of `pred` against `gold` per profile projection.
// Buckets with no gold spans do not appear.
TypeRecallTable per_type_recall(const Dataset& gold, const Dataset& pred,
                                const std::vector<Dim>& dims,
                                const ComplianceRules& rules,
                                const Lexicon& lexicon);

// Gold span counts of a target dataset under the same projection.
struct TargetTypeCounts {
  std::vector<Dim> dims;
  std::map<SliceKey, std::int64_t> rows;
  std::int64_t total = 0;
};

TargetTypeCounts target_type_counts(const Dataset& gold,
                                    const std::vector<Dim>& dims,
                                    const ComplianceRules& rules,
                                    const Lexicon& lexicon);

// What to do when a target type never occurred in the benchmark:
//   kBackoff     - drop dimensions in a fixed order (quoted, casing,
//                  position, ambiguity, adjacency, shape) until the
//                  remaining projection has benchmark support, ending at
//                  the overall recall;
//   kOverallOnly - jump straight to the overall benchmark recall;
//   kStrict      - fail, listing the unseen types.
enum class FallbackPolicy { kBackoff, kOverallOnly, kStrict };

FallbackPolicy fallback_policy_from_name(std::string_view name);
std::string to_string(FallbackPolicy policy);

struct PredictionRow {
  SliceKey key;
  std::int64_t count = 0;       // m_t: spans of this type in the target
  double recall_used = 0.0;     // r_t after any fallback
  int fallback_level = 0;       // 0 = exact table hit
  std::vector<std::string> dropped_dims;
};

// Expected true positives stay real-valued; expected_tp + expected_fn always
// equals the target total and predicted_recall = expected_tp / total.
struct PredictionReport {
  double expected_tp = 0.0;
  double expected_fn = 0.0;
  double predicted_recall = 0.0;
  std::int64_t target_total = 0;
  std::vector<PredictionRow> per_type;
  std::vector<std::string> fallback_log;
};

PredictionReport predict_recall(const TypeRecallTable& table,
                                const TargetTypeCounts& counts,
                                FallbackPolicy policy = FallbackPolicy::kBackoff);

}  // namespace spandiag

#endif  // SPANDIAG_PREDICT_H_
