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

#include "ontovsm/corpus_io.h"

#include <algorithm>
#include <fstream>
#include <set>

#include "ontovsm/errors.h"
#include "ontovsm/text.h"

namespace ontovsm {
namespace {

std::ifstream open(const std::filesystem::path& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw Error(std::string("cannot open ") + what + " '" + path.string() + "'");
  return in;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool valid_id(std::string_view id) {
  return !id.empty() && std::none_of(id.begin(), id.end(), [](char c) {
    return is_space_byte(c) || c == ',';
  });
}

}  // namespace

std::vector<Document> parse_corpus(std::istream& in,
                                   const std::string& source_name) {
  std::vector<Document> docs;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  bool first_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.starts_with("DOC\t")) {
      std::string id(trim(std::string_view(line).substr(4)));
      if (!valid_id(id)) {
        throw ParseError(source_name, line_no, "invalid doc id '" + id + "'");
      }
      if (!seen.insert(id).second) {
        throw DuplicateIdError(source_name + ":" + std::to_string(line_no) +
                               ": duplicate doc id '" + id + "'");
      }
      docs.push_back({std::move(id), {}});
      first_line = true;
      continue;
    }
    if (docs.empty()) {
      if (trim(line).empty()) continue;
      throw ParseError(source_name, line_no, "text before the first DOC line");
    }
    std::string& text = docs.back().text;
    if (!first_line) text.push_back('\n');
    text += line;
    first_line = false;
  }
  return docs;
}

std::vector<Document> read_corpus(const std::filesystem::path& path) {
  std::ifstream in = open(path, "corpus");
  return parse_corpus(in, path.string());
}

std::vector<QueryRecord> parse_queries(std::istream& in,
                                       const std::string& source_name) {
  std::vector<QueryRecord> queries;
  std::set<std::string> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (trim(line).empty() || line.front() == '#') continue;
    const auto f = split(line, '\t');
    if (f.size() < 2 || f.size() > 3) {
      throw ParseError(source_name, line_no,
                       "query line needs id, text and an optional WH= column");
    }
    QueryRecord q;
    q.id = std::string(trim(f[0]));
    if (!valid_id(q.id)) {
      throw ParseError(source_name, line_no, "invalid query id '" + q.id + "'");
    }
    q.text = f[1];
    if (f.size() == 3) {
      const std::string_view col = trim(f[2]);
      if (!col.starts_with("WH=")) {
        throw ParseError(source_name, line_no, "third column must be WH=class");
      }
      std::string cls(trim(col.substr(3)));
      q.wh_override = cls == "-" ? std::string() : cls;
    }
    if (!seen.insert(q.id).second) {
      throw DuplicateIdError(source_name + ":" + std::to_string(line_no) +
                             ": duplicate query id '" + q.id + "'");
    }
    queries.push_back(std::move(q));
  }
  return queries;
}

std::vector<QueryRecord> read_queries(const std::filesystem::path& path) {
  std::ifstream in = open(path, "queries");
  return parse_queries(in, path.string());
}

StopWordSet read_stopwords(const std::filesystem::path& path) {
  std::ifstream in = open(path, "stop-word list");
  StopWordSet words;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view w = trim(line);
    if (w.empty() || w.front() == '#') continue;
    words.insert(fold_case(w));
  }
  return words;
}

InterrogativeMap read_interrogative_map(const std::filesystem::path& path) {
  std::ifstream in = open(path, "interrogative mapping");
  InterrogativeMap map;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (trim(line).empty() || line.front() == '#') continue;
    const auto f = split(line, '\t');
    if (f.size() != 2 || trim(f[0]).empty() || trim(f[1]).empty()) {
      throw ParseError(path.string(), line_no, "expected word<TAB>class_id");
    }
    map[fold_case(trim(f[0]))] = std::string(trim(f[1]));
  }
  return map;
}

}  // namespace ontovsm
