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

#ifndef ONTOVSM_REPORT_H_
#define ONTOVSM_REPORT_H_

#include <ostream>
#include <string>
#include <vector>

#include "ontovsm/eval.h"
#include "ontovsm/sigtest.h"
#include "ontovsm/trec_io.h"

namespace ontovsm {

struct QueryEval {
  std::string query_id;
  double average_precision = 0.0;
  PRCurve curve;
};

struct EvalReport {
  std::vector<QueryEval> queries;  // query id order
  double map = 0.0;
  PRCurve mean_curve;
};

// Evaluates a run over every qrels query with at least one relevant
// document; queries the run does not answer score AP 0 and an all-zero
// curve. Throws ValidationError when the run shares no query id with those
// qrels queries.
EvalReport evaluate_run(const Run& run, const Qrels& qrels);

// Per-query APs of two runs over the same evaluated query set, in query id
// order. Throws ValidationError when either run covers none of the
// evaluated queries.
struct PairedAps {
  std::vector<std::string> query_ids;
  std::vector<double> a;
  std::vector<double> b;
};
PairedAps paired_average_precisions(const Run& run_a, const Run& run_b,
                                    const Qrels& qrels);

// Rows: `ap <TAB> qid <TAB> value`, `map <TAB> all <TAB> value`, then
// `ipr <TAB> level <TAB> precision <TAB> f` for the 11 recall levels.
void write_eval_report(std::ostream& out, const EvalReport& report);

// Header `delta n_minus n_plus p n_perm seed` and one value row, tab
// separated.
void write_sigtest_report(std::ostream& out, const SigTestResult& r);

}  // namespace ontovsm

#endif  // ONTOVSM_REPORT_H_
