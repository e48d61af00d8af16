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

#ifndef ONTOVSM_INDEX_H_
#define ONTOVSM_INDEX_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ontovsm/expand.h"
#include "ontovsm/term.h"

namespace ontovsm {

class IndexBuilder;

// Position of a document in the bundle's roster. The roster is sorted by
// doc id, so ordinal order is doc id order.
using DocOrdinal = std::uint32_t;

struct Posting {
  DocOrdinal doc = 0;
  std::uint32_t tf = 0;  // >= 1

  friend bool operator==(const Posting&, const Posting&) = default;
};

// tf * ln(n_docs / df). Throws std::domain_error unless tf >= 1 and
// 1 <= df <= n_docs.
double tfidf_weight(std::uint32_t tf, std::uint32_t df, std::uint32_t n_docs);

// Inverted index for one space. Immutable once built.
class SpaceIndex {
 public:
  SpaceIndex() = default;

  std::uint32_t n_docs() const { return n_docs_; }
  std::size_t term_count() const { return postings_.size(); }

  // 0 for unseen terms.
  std::uint32_t df(const GeneralizedTerm& term) const;
  // Sorted by doc ordinal; empty for unseen terms.
  std::span<const Posting> postings(const GeneralizedTerm& term) const;

  // Euclidean norm of the document's tf-idf vector in this space.
  double doc_norm(DocOrdinal doc) const { return norms_.at(doc); }
  const std::vector<double>& doc_norms() const { return norms_; }

  // All terms in serialized-key order.
  std::vector<const GeneralizedTerm*> sorted_terms() const;

  friend bool operator==(const SpaceIndex&, const SpaceIndex&) = default;

 private:
  friend class IndexBundle;
  friend class IndexBuilder;
  using PostingMap = std::unordered_map<GeneralizedTerm, std::vector<Posting>,
                                        GeneralizedTermHash>;

  static SpaceIndex from_postings(PostingMap postings, std::uint32_t n_docs);

  PostingMap postings_;
  std::vector<double> norms_;
  std::uint32_t n_docs_ = 0;
};

// Indexes over all six spaces plus the document roster.
class IndexBundle {
 public:
  IndexBundle() = default;

  // Throws DuplicateIdError on a repeated doc id. The result does not
  // depend on the order of `reps`.
  static IndexBundle build(std::vector<DocRepresentation> reps);

  // Reassembles a bundle from per-space postings keyed by doc id, as read
  // back from disk. Norms are recomputed from the postings.
  static IndexBundle from_postings(
      std::vector<std::string> roster,
      const std::array<std::map<GeneralizedTerm,
                                std::vector<std::pair<std::string, std::uint32_t>>>,
                       kNumSpaces>& postings);

  const SpaceIndex& space(Space s) const {
    return spaces_[static_cast<std::size_t>(s)];
  }
  const std::vector<std::string>& roster() const { return roster_; }
  std::size_t size() const { return roster_.size(); }
  const std::string& doc_id(DocOrdinal d) const { return roster_.at(d); }
  std::optional<DocOrdinal> find_doc(const std::string& doc_id) const;

  friend bool operator==(const IndexBundle&, const IndexBundle&) = default;

 private:
  friend class IndexBuilder;
  std::vector<std::string> roster_;
  std::array<SpaceIndex, kNumSpaces> spaces_;
};

// Accumulates documents, possibly in independent shards that are merged
// afterwards. merge() is associative and commutative; build() produces the
// same bundle regardless of how documents were distributed.
class IndexBuilder {
 public:
  // Throws DuplicateIdError.
  void add(DocRepresentation rep);
  void merge(IndexBuilder&& other);
  std::size_t size() const { return docs_.size(); }
  IndexBundle build() &&;

 private:
  std::map<std::string, std::array<TermBag, kNumSpaces>> docs_;
};

IndexBundle build_index(std::vector<DocRepresentation> reps);

}  // namespace ontovsm

#endif  // ONTOVSM_INDEX_H_
