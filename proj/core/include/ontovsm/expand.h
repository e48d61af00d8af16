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

#ifndef ONTOVSM_EXPAND_H_
#define ONTOVSM_EXPAND_H_

#include <array>
#include <string>
#include <string_view>

#include "ontovsm/annotate.h"
#include "ontovsm/kb.h"
#include "ontovsm/term.h"

namespace ontovsm {

enum class ExpansionModel {
  kMultiVector,  // KW plus the four ontological spaces N, C, NC, I
  kGeneralized,  // single generalized-term space G
};

// Per-space term bags for one document or query.
struct DocRepresentation {
  std::string doc_id;
  std::array<TermBag, kNumSpaces> bags;

  TermBag& bag(Space s) { return bags[static_cast<std::size_t>(s)]; }
  const TermBag& bag(Space s) const {
    return bags[static_cast<std::size_t>(s)];
  }

  friend bool operator==(const DocRepresentation&,
                         const DocRepresentation&) = default;
};

// Document-side expansion. Keywords go to KW (and to G under the
// generalized model). Every entity mention adds, once per mention, its
// names (canonical plus aliases), its classes (own plus non-top-level
// superclasses), every name-class pair and its identifier. Unspecified
// slots drop the corresponding families. Throws UnknownIdError when an
// annotation references an undeclared class or entity.
DocRepresentation expand_document(const AnnotatedText& at,
                                  const KnowledgeBase& kb,
                                  ExpansionModel model);

// Query-side expansion. Each entity mention contributes exactly one term,
// its most specific available shape: id, else (name, class), else class or
// name. No alias or superclass closure. When `wh` is set, each wh class adds
// one class-only term.
DocRepresentation expand_query(const AnnotatedText& at, const KnowledgeBase& kb,
                               ExpansionModel model, bool wh);

// Full indexing representation of one document: KW, N, C, NC and I from
// the multi-vector pipeline (entity names kept as keywords) and G from the
// generalized pipeline (entity names removed from the keywords).
DocRepresentation represent_document(std::string doc_id, std::string_view text,
                                     const Annotator& annotator);

}  // namespace ontovsm

#endif  // ONTOVSM_EXPAND_H_
