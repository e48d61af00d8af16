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

#ifndef ONTOVSM_TREC_IO_H_
#define ONTOVSM_TREC_IO_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "ontovsm/eval.h"
#include "ontovsm/rank.h"

namespace ontovsm {

// query id -> relevant doc ids. Queries whose judgments are all
// non-relevant are kept with an empty set.
using Qrels = std::map<std::string, RelevantSet>;

// TREC qrels: `query_id iteration doc_id rel`, whitespace separated;
// rel > 0 means relevant.
Qrels parse_qrels(std::istream& in, const std::string& source_name);
Qrels read_qrels(const std::filesystem::path& path);

struct RunEntry {
  std::string doc_id;
  std::size_t rank = 0;
  double score = 0.0;
};

// query id -> entries sorted by the file's rank column.
using Run = std::map<std::string, std::vector<RunEntry>>;

// TREC run: `query_id Q0 doc_id rank score tag`.
Run parse_run(std::istream& in, const std::string& source_name);
Run read_run(const std::filesystem::path& path);

// Doc ids of one query's entries, in rank order.
std::vector<std::string> ranked_doc_ids(const std::vector<RunEntry>& entries);

// Writes one line per result with 1-based ranks and 6-decimal scores.
void write_run(std::ostream& out, const std::string& query_id,
               const std::vector<ScoredDoc>& results, const std::string& tag);

}  // namespace ontovsm

#endif  // ONTOVSM_TREC_IO_H_
