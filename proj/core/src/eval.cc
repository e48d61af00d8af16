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

#include "ontovsm/eval.h"

#include <algorithm>
#include <stdexcept>

namespace ontovsm {

double average_precision(std::span<const std::string> ranking,
                         const RelevantSet& relevant) {
  if (relevant.empty()) {
    throw std::invalid_argument("average_precision: empty relevant set");
  }
  std::unordered_set<std::string> seen;
  double sum = 0.0;
  std::size_t hits = 0;
  std::size_t rank = 0;
  for (const std::string& doc : ranking) {
    if (!seen.insert(doc).second) continue;
    ++rank;
    if (relevant.contains(doc)) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(rank);
    }
  }
  return sum / static_cast<double>(relevant.size());
}

double map_score(std::span<const double> per_query_ap) {
  if (per_query_ap.empty()) {
    throw std::invalid_argument("map_score: empty list");
  }
  double sum = 0.0;
  for (double ap : per_query_ap) sum += ap;
  return sum / static_cast<double>(per_query_ap.size());
}

double recall_level(std::size_t i) { return static_cast<double>(i) / 10.0; }

PRCurve interpolated_curve(std::span<const std::string> ranking,
                           const RelevantSet& relevant) {
  if (relevant.empty()) {
    throw std::invalid_argument("interpolated_curve: empty relevant set");
  }
  const auto total = static_cast<double>(relevant.size());
  // best[i]: max precision over cutoffs whose recall reaches level i.
  std::array<double, kRecallLevels> best{};
  std::unordered_set<std::string> seen;
  std::size_t hits = 0;
  std::size_t rank = 0;
  for (const std::string& doc : ranking) {
    if (!seen.insert(doc).second) continue;
    ++rank;
    if (relevant.contains(doc)) ++hits;
    const double precision = static_cast<double>(hits) / static_cast<double>(rank);
    // Levels are compared as hits * 10 >= i * |R| to avoid rounding at
    // exact level boundaries.
    for (std::size_t i = 0; i < kRecallLevels; ++i) {
      if (static_cast<double>(hits) * 10.0 >= static_cast<double>(i) * total) {
        best[i] = std::max(best[i], precision);
      }
    }
  }
  PRCurve curve;
  for (std::size_t i = 0; i < kRecallLevels; ++i) {
    CurvePoint& pt = curve.points[i];
    pt.recall = recall_level(i);
    pt.precision = best[i];
    const double denom = pt.precision + pt.recall;
    pt.f_measure = denom == 0.0 ? 0.0 : 2.0 * pt.precision * pt.recall / denom;
  }
  return curve;
}

PRCurve average_curves(std::span<const PRCurve> curves) {
  PRCurve out;
  for (std::size_t i = 0; i < kRecallLevels; ++i) {
    out.points[i].recall = recall_level(i);
  }
  if (curves.empty()) return out;
  for (const PRCurve& c : curves) {
    for (std::size_t i = 0; i < kRecallLevels; ++i) {
      out.points[i].precision += c.points[i].precision;
      out.points[i].f_measure += c.points[i].f_measure;
    }
  }
  const auto n = static_cast<double>(curves.size());
  for (CurvePoint& p : out.points) {
    p.precision /= n;
    p.f_measure /= n;
  }
  return out;
}

std::vector<double> per_query_diff(std::span<const double> a,
                                   std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("per_query_diff: length mismatch");
  }
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace ontovsm
