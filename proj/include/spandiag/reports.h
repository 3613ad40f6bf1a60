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

#ifndef SPANDIAG_REPORTS_H_
#define SPANDIAG_REPORTS_H_

#include <string>

#include <nlohmann/json.hpp>

#include "spandiag/diagnostics.h"
#include "spandiag/metrics.h"
#include "spandiag/predict.h"
#include "spandiag/stats.h"

// JSON and plain-text rendering of report structures. All documents carry a
// schema_version and contain nothing run-dependent, so identical inputs
// serialize to identical bytes.

namespace spandiag {

inline constexpr int kReportSchemaVersion = 1;

using Json = nlohmann::ordered_json;

Json to_json(const ScoreSummary& summary);
Json to_json(const ConfusionCounts& counts);
Json to_json(const ErrorTypology& typology);
Json to_json(const SliceReport& report);
Json to_json(const PredictionReport& report);
Json to_json(const CorrelationReport& report);
Json to_json(const AgreementReport& report);

// Wraps a payload as {"schema_version": .., "kind": .., ...payload}.
Json report_document(const std::string& kind, Json payload);

// Plain-text slice table. When `quoted` is one of the report's dimensions it
// is pivoted into quoted/unquoted recall columns; other dimensions form the
// row labels.
std::string slice_table_text(const SliceReport& report);

std::string score_text(const ScoreSummary& span_level,
                       const ScoreSummary& token_separator,
                       const ErrorTypology& typology);

}  // namespace spandiag

#endif  // SPANDIAG_REPORTS_H_
