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

#ifndef SPANDIAG_STATS_H_
#define SPANDIAG_STATS_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace spandiag {

// Product-moment correlation. Throws ValidationError on length mismatch,
// fewer than two points, or a constant input (undefined variance).
double pearson(std::span<const double> xs, std::span<const double> ys);

// Ascending ranks with ties averaged, 1-based: (3, 1, 3) -> (2.5, 1, 2.5).
std::vector<double> average_ranks(std::span<const double> values);

// Pearson over tie-averaged ranks.
double spearman(std::span<const double> xs, std::span<const double> ys);

struct CorrelationReport {
  double pearson = 0.0;
  double spearman = 0.0;
  std::size_t n = 0;
};

CorrelationReport correlate(std::span<const double> xs,
                            std::span<const double> ys);

// Ranks systems by descending score, 1-based, ties averaged:
// {A:0.5, B:0.5, C:0.1} -> {A:1.5, B:1.5, C:3}.
std::map<std::string, double> rank_systems(
    const std::map<std::string, double>& scores);

}  // namespace spandiag

#endif  // SPANDIAG_STATS_H_
