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

#ifndef ONTOVSM_INDEX_IO_H_
#define ONTOVSM_INDEX_IO_H_

#include <filesystem>

#include "ontovsm/index.h"

namespace ontovsm {

// On-disk layout of an index directory:
//   manifest.tsv  space <TAB> n_docs <TAB> space file <TAB> terms
//   <space>.tsv   N <TAB> doc_id <TAB> norm            (every doc, %.12g)
//                 T <TAB> term <TAB> df <TAB> doc:tf,...  (term order)
// Files are fully determined by the bundle, so identical inputs give
// byte-identical directories.
void write_index(const IndexBundle& bundle, const std::filesystem::path& dir);

// Throws ParseError on malformed files and ValidationError when the stored
// df or norms disagree with the postings.
IndexBundle read_index(const std::filesystem::path& dir);

}  // namespace ontovsm

#endif  // ONTOVSM_INDEX_IO_H_
