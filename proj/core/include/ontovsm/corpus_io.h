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

#ifndef ONTOVSM_CORPUS_IO_H_
#define ONTOVSM_CORPUS_IO_H_

#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "ontovsm/annotate.h"

namespace ontovsm {

struct Document {
  std::string id;
  std::string text;
};

// Corpus records: a `DOC<TAB>doc_id` line followed by text lines up to the
// next DOC line. Doc ids may not contain whitespace or ','. Throws
// DuplicateIdError naming a repeated id.
std::vector<Document> parse_corpus(std::istream& in,
                                   const std::string& source_name);
std::vector<Document> read_corpus(const std::filesystem::path& path);

struct QueryRecord {
  std::string id;
  std::string text;
  // From an optional `WH=class_id` column; `WH=` or `WH=-` gives an empty
  // string, which suppresses the interrogative class.
  std::optional<ClassId> wh_override;
};

// `query_id<TAB>text[<TAB>WH=class_id]`; '#' comments and blank lines are
// skipped.
std::vector<QueryRecord> parse_queries(std::istream& in,
                                       const std::string& source_name);
std::vector<QueryRecord> read_queries(const std::filesystem::path& path);

// One word per line; case-folded on load. '#' lines are comments.
StopWordSet read_stopwords(const std::filesystem::path& path);

// `word<TAB>class_id` per line.
InterrogativeMap read_interrogative_map(const std::filesystem::path& path);

}  // namespace ontovsm

#endif  // ONTOVSM_CORPUS_IO_H_
