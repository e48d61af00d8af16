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

#include "ontovsm/trec_io.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "ontovsm/errors.h"
#include "ontovsm/text.h"

namespace ontovsm {
namespace {

std::vector<std::string> whitespace_fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space_byte(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space_byte(line[i])) ++i;
    if (i > start) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

template <typename T>
T number(const std::string& s, const std::string& src, std::size_t line) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(src, line, "bad number '" + s + "'");
  }
  return v;
}

}  // namespace

Qrels parse_qrels(std::istream& in, const std::string& source_name) {
  Qrels qrels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto f = whitespace_fields(line);
    if (f.empty()) continue;
    if (f.size() != 4) {
      throw ParseError(source_name, line_no, "qrels line needs 4 fields");
    }
    const double rel = number<double>(f[3], source_name, line_no);
    RelevantSet& set = qrels[f[0]];
    if (rel > 0) set.insert(f[2]);
  }
  return qrels;
}

Qrels read_qrels(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open qrels '" + path.string() + "'");
  return parse_qrels(in, path.string());
}

Run parse_run(std::istream& in, const std::string& source_name) {
  Run run;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto f = whitespace_fields(line);
    if (f.empty()) continue;
    if (f.size() != 6) {
      throw ParseError(source_name, line_no, "run line needs 6 fields");
    }
    run[f[0]].push_back({f[2], number<std::size_t>(f[3], source_name, line_no),
                         number<double>(f[4], source_name, line_no)});
  }
  for (auto& [qid, entries] : run) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const RunEntry& a, const RunEntry& b) {
                       return a.rank < b.rank;
                     });
  }
  return run;
}

Run read_run(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open run '" + path.string() + "'");
  return parse_run(in, path.string());
}

std::vector<std::string> ranked_doc_ids(const std::vector<RunEntry>& entries) {
  std::vector<std::string> ids;
  ids.reserve(entries.size());
  for (const RunEntry& e : entries) ids.push_back(e.doc_id);
  return ids;
}

void write_run(std::ostream& out, const std::string& query_id,
               const std::vector<ScoredDoc>& results, const std::string& tag) {
  char score[32];
  for (std::size_t i = 0; i < results.size(); ++i) {
    std::snprintf(score, sizeof(score), "%.6f", results[i].score);
    out << query_id << " Q0 " << results[i].doc_id << ' ' << (i + 1) << ' '
        << score << ' ' << tag << '\n';
  }
}

}  // namespace ontovsm
