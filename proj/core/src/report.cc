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

#include "ontovsm/report.h"

#include <cstdio>

#include "ontovsm/errors.h"

namespace ontovsm {
namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::vector<std::string> judged_queries(const Qrels& qrels) {
  std::vector<std::string> ids;
  for (const auto& [qid, rel] : qrels) {
    if (!rel.empty()) ids.push_back(qid);
  }
  return ids;
}

bool overlaps(const Run& run, const std::vector<std::string>& ids) {
  for (const std::string& id : ids) {
    if (run.contains(id)) return true;
  }
  return false;
}

std::vector<std::string> answers(const Run& run, const std::string& qid) {
  auto it = run.find(qid);
  return it == run.end() ? std::vector<std::string>{} : ranked_doc_ids(it->second);
}

}  // namespace

EvalReport evaluate_run(const Run& run, const Qrels& qrels) {
  const std::vector<std::string> ids = judged_queries(qrels);
  if (!overlaps(run, ids)) {
    throw ValidationError("run and qrels share no judged query id");
  }
  EvalReport report;
  std::vector<double> aps;
  std::vector<PRCurve> curves;
  for (const std::string& qid : ids) {
    const std::vector<std::string> ranking = answers(run, qid);
    const RelevantSet& rel = qrels.at(qid);
    QueryEval q{qid, average_precision(ranking, rel), interpolated_curve(ranking, rel)};
    aps.push_back(q.average_precision);
    curves.push_back(q.curve);
    report.queries.push_back(std::move(q));
  }
  report.map = map_score(aps);
  report.mean_curve = average_curves(curves);
  return report;
}

PairedAps paired_average_precisions(const Run& run_a, const Run& run_b,
                                    const Qrels& qrels) {
  const std::vector<std::string> ids = judged_queries(qrels);
  if (!overlaps(run_a, ids) || !overlaps(run_b, ids)) {
    throw ValidationError(
        "unpaired runs: each run must answer at least one judged query");
  }
  PairedAps out;
  for (const std::string& qid : ids) {
    const RelevantSet& rel = qrels.at(qid);
    out.query_ids.push_back(qid);
    out.a.push_back(average_precision(answers(run_a, qid), rel));
    out.b.push_back(average_precision(answers(run_b, qid), rel));
  }
  return out;
}

void write_eval_report(std::ostream& out, const EvalReport& report) {
  for (const QueryEval& q : report.queries) {
    out << "ap\t" << q.query_id << '\t' << fixed(q.average_precision, 6) << '\n';
  }
  out << "map\tall\t" << fixed(report.map, 6) << '\n';
  for (const CurvePoint& p : report.mean_curve.points) {
    out << "ipr\t" << fixed(p.recall, 1) << '\t' << fixed(p.precision, 6) << '\t'
        << fixed(p.f_measure, 6) << '\n';
  }
}

void write_sigtest_report(std::ostream& out, const SigTestResult& r) {
  out << "delta\tn_minus\tn_plus\tp\tn_perm\tseed\n";
  out << fixed(r.delta, 6) << '\t' << r.n_minus << '\t' << r.n_plus << '\t'
      << fixed(r.p_two_sided, 5) << '\t' << r.n_perm << '\t' << r.seed << '\n';
}

}  // namespace ontovsm
