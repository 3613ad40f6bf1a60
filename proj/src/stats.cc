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

#include "spandiag/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "spandiag/corpus.h"

namespace spandiag {

double pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw ValidationError("pearson: length mismatch (" +
                          std::to_string(xs.size()) + " vs " +
                          std::to_string(ys.size()) + ")");
  }
  const std::size_t n = xs.size();
  if (n < 2) throw ValidationError("pearson: need at least 2 points");

  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw ValidationError("pearson: constant input has undefined variance");
  }
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return values[a] < values[b];
                   });

  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) share the value; average of 1-based ranks.
    const double rank = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw ValidationError("spearman: length mismatch (" +
                          std::to_string(xs.size()) + " vs " +
                          std::to_string(ys.size()) + ")");
  }
  const std::vector<double> rx = average_ranks(xs);
  const std::vector<double> ry = average_ranks(ys);
  return pearson(rx, ry);
}

CorrelationReport correlate(std::span<const double> xs,
                            std::span<const double> ys) {
  return CorrelationReport{pearson(xs, ys), spearman(xs, ys), xs.size()};
}

std::map<std::string, double> rank_systems(
    const std::map<std::string, double>& scores) {
  if (scores.empty()) {
    throw ValidationError("rank_systems: need at least one system");
  }
  std::vector<double> negated;
  std::vector<std::string> names;
  negated.reserve(scores.size());
  for (const auto& [name, score] : scores) {
    names.push_back(name);
    negated.push_back(-score);  // descending: best score gets rank 1
  }
  const std::vector<double> ranks = average_ranks(negated);
  std::map<std::string, double> out;
  for (std::size_t i = 0; i < names.size(); ++i) out[names[i]] = ranks[i];
  return out;
}

}  // namespace spandiag
