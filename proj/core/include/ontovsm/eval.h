// Copyright 2026 The ontovsm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ONTOVSM_EVAL_H_
#define ONTOVSM_EVAL_H_

#include <array>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

namespace ontovsm {

using RelevantSet = std::unordered_set<std::string>;

// Mean over the relevant documents of the precision at the rank where each
// one is retrieved; unretrieved relevant documents contribute 0. Repeated
// doc ids in the ranking count at their first position only. Throws
// std::invalid_argument when `relevant` is empty.
double average_precision(std::span<const std::string> ranking,
                         const RelevantSet& relevant);

// Arithmetic mean. Throws std::invalid_argument on an empty list.
double map_score(std::span<const double> per_query_ap);

inline constexpr std::size_t kRecallLevels = 11;

struct CurvePoint {
  double recall = 0.0;     // 0.0, 0.1, ..., 1.0
  double precision = 0.0;  // interpolated
  double f_measure = 0.0;  // 2PR / (P + R) at this level, 0 when P + R = 0
};

struct PRCurve {
  std::array<CurvePoint, kRecallLevels> points;
};

// Recall level i / 10 for i in [0, 10].
double recall_level(std::size_t i);

// Interpolated precision at level r is the maximum precision at any cutoff
// whose recall is >= r (0 when no cutoff reaches r).
PRCurve interpolated_curve(std::span<const std::string> ranking,
                           const RelevantSet& relevant);

// Point-wise mean of several curves (precision and F averaged separately).
PRCurve average_curves(std::span<const PRCurve> curves);

// a[i] - b[i]. Throws std::invalid_argument on a length mismatch.
std::vector<double> per_query_diff(std::span<const double> a,
                                   std::span<const double> b);

}  // namespace ontovsm

#endif  // ONTOVSM_EVAL_H_
