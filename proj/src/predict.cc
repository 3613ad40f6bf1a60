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

#include "spandiag/predict.h"

#include <algorithm>
#include <optional>

namespace spandiag {

std::int64_t TypeRecallTable::total_tp() const {
  std::int64_t t = 0;
  for (const auto& [key, row] : rows) t += row.tp;
  return t;
}

std::int64_t TypeRecallTable::total_support() const {
  std::int64_t t = 0;
  for (const auto& [key, row] : rows) t += row.support;
  return t;
}

double TypeRecallTable::overall_recall() const {
  const std::int64_t support = total_support();
  return support == 0 ? 0.0
                      : static_cast<double>(total_tp()) /
                            static_cast<double>(support);
}

TypeRecallTable per_type_recall(const Dataset& gold, const Dataset& pred,
                                const std::vector<Dim>& dims,
                                const ComplianceRules& rules,
                                const Lexicon& lexicon) {
  check_aligned(gold, pred);
  TypeRecallTable table;
  table.dims = dims;
  for (std::size_t si = 0; si < gold.sentences.size(); ++si) {
    const Sentence& gs = gold.sentences[si];
    const Sentence& ps = pred.sentences[si];
    for (const Span& span : gs.spans) {
      const AttributeProfile profile = profile_span(gs, span, rules, lexicon);
      SliceKey key;
      key.reserve(dims.size());
      for (Dim d : dims) key.push_back(dim_value(profile, d));
      TypeRecallRow& row = table.rows[key];
      ++row.support;
      if (std::find(ps.spans.begin(), ps.spans.end(), span) != ps.spans.end()) {
        ++row.tp;
      }
    }
  }
  return table;
}

TargetTypeCounts target_type_counts(const Dataset& gold,
                                    const std::vector<Dim>& dims,
                                    const ComplianceRules& rules,
                                    const Lexicon& lexicon) {
  TargetTypeCounts counts;
  counts.dims = dims;
  for (const Sentence& s : gold.sentences) {
    for (const Span& span : s.spans) {
      const AttributeProfile profile = profile_span(s, span, rules, lexicon);
      SliceKey key;
      key.reserve(dims.size());
      for (Dim d : dims) key.push_back(dim_value(profile, d));
      ++counts.rows[key];
      ++counts.total;
    }
  }
  return counts;
}

FallbackPolicy fallback_policy_from_name(std::string_view name) {
  if (name == "backoff") return FallbackPolicy::kBackoff;
  if (name == "overall-only") return FallbackPolicy::kOverallOnly;
  if (name == "strict") return FallbackPolicy::kStrict;
  throw ValidationError("unknown fallback policy '" + std::string(name) + "'");
}

std::string to_string(FallbackPolicy policy) {
  switch (policy) {
    case FallbackPolicy::kBackoff: return "backoff";
    case FallbackPolicy::kOverallOnly: return "overall-only";
    case FallbackPolicy::kStrict: return "strict";
  }
  return "";
}

namespace {

// Dimension groups dropped per backoff stage, in order. The two raw casing
// dimensions back off together with the derived one, and the derived type
// dimension backs off with shape.
const std::vector<std::vector<Dim>>& backoff_stages() {
  static const std::vector<std::vector<Dim>> kStages = {
      {Dim::kQuoted},
      {Dim::kCasing, Dim::kTextCasing, Dim::kSpanCasing},
      {Dim::kPosition},
      {Dim::kAmbiguity},
      {Dim::kAdjacent},
      {Dim::kShape, Dim::kType},
  };
  return kStages;
}

// Aggregated (tp, support) of every table row matching the unmasked
// positions of `partial`.
TypeRecallRow lookup_partial(const TypeRecallTable& table,
                             const std::vector<std::optional<std::string>>& partial) {
  TypeRecallRow out;
  for (const auto& [key, row] : table.rows) {
    bool match = true;
    for (std::size_t i = 0; i < partial.size(); ++i) {
      if (partial[i] && key[i] != *partial[i]) {
        match = false;
        break;
      }
    }
    if (match) {
      out.tp += row.tp;
      out.support += row.support;
    }
  }
  return out;
}

}  // namespace

PredictionReport predict_recall(const TypeRecallTable& table,
                                const TargetTypeCounts& counts,
                                FallbackPolicy policy) {
  if (table.dims != counts.dims) {
    throw ValidationError(
        "benchmark table and target counts use different dimension lists");
  }
  const std::vector<Dim>& dims = table.dims;

  PredictionReport report;
  report.target_total = counts.total;

  std::vector<std::string> unseen;

  for (const auto& [key, m] : counts.rows) {
    PredictionRow row;
    row.key = key;
    row.count = m;

    auto exact = table.rows.find(key);
    std::int64_t tp = 0, support = 0;
    if (exact != table.rows.end()) {
      tp = exact->second.tp;
      support = exact->second.support;
    } else if (policy == FallbackPolicy::kStrict) {
      unseen.push_back(slice_key_to_string(dims, key));
      continue;
    } else if (policy == FallbackPolicy::kOverallOnly) {
      tp = table.total_tp();
      support = table.total_support();
      row.fallback_level = 1;
      row.dropped_dims.push_back("all");
    } else {
      // Dimension backoff: mask dimension groups in the fixed order until
      // the remaining projection has support.
      std::vector<std::optional<std::string>> partial(key.size());
      for (std::size_t i = 0; i < key.size(); ++i) partial[i] = key[i];

      int level = 0;
      for (const std::vector<Dim>& stage : backoff_stages()) {
        bool changed = false;
        for (std::size_t i = 0; i < dims.size(); ++i) {
          if (partial[i] &&
              std::find(stage.begin(), stage.end(), dims[i]) != stage.end()) {
            partial[i].reset();
            row.dropped_dims.push_back(dim_name(dims[i]));
            changed = true;
          }
        }
        if (!changed) continue;
        ++level;
        const TypeRecallRow agg = lookup_partial(table, partial);
        if (agg.support > 0) {
          tp = agg.tp;
          support = agg.support;
          break;
        }
      }
      if (support == 0) {
        // Nothing matched even the coarsest projection: overall recall.
        tp = table.total_tp();
        support = table.total_support();
        for (std::size_t i = 0; i < dims.size(); ++i) {
          if (partial[i]) row.dropped_dims.push_back(dim_name(dims[i]));
        }
        ++level;
      }
      row.fallback_level = level;
    }

    row.recall_used =
        support == 0 ? 0.0
                     : static_cast<double>(tp) / static_cast<double>(support);
    // m * tp / support with the division last keeps proportional targets
    // exact (the distribution-identity property).
    const double contribution =
        support == 0 ? 0.0
                     : static_cast<double>(m) * static_cast<double>(tp) /
                           static_cast<double>(support);
    report.expected_tp += contribution;

    if (row.fallback_level > 0) {
      std::string entry = slice_key_to_string(dims, key) + " -> ";
      entry += policy == FallbackPolicy::kOverallOnly ? "overall recall"
                                                      : "dropped ";
      if (policy != FallbackPolicy::kOverallOnly) {
        for (std::size_t i = 0; i < row.dropped_dims.size(); ++i) {
          if (i > 0) entry += ",";
          entry += row.dropped_dims[i];
        }
      }
      report.fallback_log.push_back(entry);
    }
    report.per_type.push_back(std::move(row));
  }

  if (!unseen.empty()) {
    std::string msg = "strict policy: benchmark has no recall for: ";
    for (std::size_t i = 0; i < unseen.size(); ++i) {
      if (i > 0) msg += "; ";
      msg += unseen[i];
    }
    throw ValidationError(msg);
  }

  report.expected_fn =
      static_cast<double>(counts.total) - report.expected_tp;
  report.predicted_recall =
      counts.total == 0
          ? 0.0
          : report.expected_tp / static_cast<double>(counts.total);
  return report;
}

}  // namespace spandiag
