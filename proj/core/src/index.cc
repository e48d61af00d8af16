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

#include "ontovsm/index.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "ontovsm/errors.h"

namespace ontovsm {

double tfidf_weight(std::uint32_t tf, std::uint32_t df, std::uint32_t n_docs) {
  if (tf < 1 || df < 1 || df > n_docs) {
    throw std::domain_error("tfidf_weight: need tf >= 1 and 1 <= df <= n_docs");
  }
  if (df == n_docs) return 0.0;
  return static_cast<double>(tf) *
         std::log(static_cast<double>(n_docs) / static_cast<double>(df));
}

std::uint32_t SpaceIndex::df(const GeneralizedTerm& term) const {
  auto it = postings_.find(term);
  return it == postings_.end() ? 0
                               : static_cast<std::uint32_t>(it->second.size());
}

std::span<const Posting> SpaceIndex::postings(
    const GeneralizedTerm& term) const {
  auto it = postings_.find(term);
  if (it == postings_.end()) return {};
  return it->second;
}

std::vector<const GeneralizedTerm*> SpaceIndex::sorted_terms() const {
  std::vector<const GeneralizedTerm*> terms;
  terms.reserve(postings_.size());
  for (const auto& [term, list] : postings_) terms.push_back(&term);
  std::sort(terms.begin(), terms.end(),
            [](const auto* a, const auto* b) { return *a < *b; });
  return terms;
}

SpaceIndex SpaceIndex::from_postings(PostingMap postings,
                                     std::uint32_t n_docs) {
  SpaceIndex s;
  s.postings_ = std::move(postings);
  s.n_docs_ = n_docs;
  s.norms_.assign(n_docs, 0.0);
  // Term order fixes the summation order, so norms are bit-reproducible.
  for (const GeneralizedTerm* term : s.sorted_terms()) {
    const std::vector<Posting>& list = s.postings_.at(*term);
    const auto df = static_cast<std::uint32_t>(list.size());
    for (const Posting& p : list) {
      const double w = tfidf_weight(p.tf, df, n_docs);
      s.norms_[p.doc] += w * w;
    }
  }
  for (double& n : s.norms_) n = std::sqrt(n);
  return s;
}

std::optional<DocOrdinal> IndexBundle::find_doc(
    const std::string& doc_id) const {
  auto it = std::lower_bound(roster_.begin(), roster_.end(), doc_id);
  if (it == roster_.end() || *it != doc_id) return std::nullopt;
  return static_cast<DocOrdinal>(it - roster_.begin());
}

IndexBundle IndexBundle::build(std::vector<DocRepresentation> reps) {
  IndexBuilder builder;
  for (DocRepresentation& r : reps) builder.add(std::move(r));
  return std::move(builder).build();
}

IndexBundle IndexBundle::from_postings(
    std::vector<std::string> roster,
    const std::array<std::map<GeneralizedTerm,
                              std::vector<std::pair<std::string, std::uint32_t>>>,
                     kNumSpaces>& postings) {
  std::sort(roster.begin(), roster.end());
  if (auto dup = std::adjacent_find(roster.begin(), roster.end());
      dup != roster.end()) {
    throw DuplicateIdError("duplicate doc id '" + *dup + "'");
  }
  IndexBundle bundle;
  bundle.roster_ = std::move(roster);
  const auto n = static_cast<std::uint32_t>(bundle.roster_.size());
  for (Space space : kAllSpaces) {
    SpaceIndex::PostingMap map;
    for (const auto& [term, list] : postings[static_cast<std::size_t>(space)]) {
      std::vector<Posting> out;
      out.reserve(list.size());
      for (const auto& [doc_id, tf] : list) {
        const auto ord = bundle.find_doc(doc_id);
        if (!ord) {
          throw UnknownIdError("posting for '" + term.serialize() +
                               "' names unknown doc '" + doc_id + "'");
        }
        if (tf == 0) {
          throw ValidationError("zero tf for '" + term.serialize() + "'");
        }
        out.push_back({*ord, tf});
      }
      std::sort(out.begin(), out.end(),
                [](const Posting& a, const Posting& b) { return a.doc < b.doc; });
      for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i].doc == out[i - 1].doc) {
          throw DuplicateIdError("doc '" + bundle.roster_[out[i].doc] +
                                 "' listed twice for '" + term.serialize() + "'");
        }
      }
      if (!out.empty()) map.emplace(term, std::move(out));
    }
    bundle.spaces_[static_cast<std::size_t>(space)] =
        SpaceIndex::from_postings(std::move(map), n);
  }
  return bundle;
}

void IndexBuilder::add(DocRepresentation rep) {
  auto [it, inserted] = docs_.try_emplace(rep.doc_id, std::move(rep.bags));
  if (!inserted) {
    throw DuplicateIdError("duplicate doc id '" + it->first + "'");
  }
}

void IndexBuilder::merge(IndexBuilder&& other) {
  for (auto& [id, bags] : other.docs_) {
    if (docs_.contains(id)) {
      throw DuplicateIdError("duplicate doc id '" + id + "'");
    }
  }
  docs_.merge(other.docs_);
  other.docs_.clear();
}

IndexBundle IndexBuilder::build() && {
  IndexBundle bundle;
  bundle.roster_.reserve(docs_.size());
  for (const auto& [id, bags] : docs_) bundle.roster_.push_back(id);
  const auto n = static_cast<std::uint32_t>(docs_.size());
  for (Space space : kAllSpaces) {
    const auto si = static_cast<std::size_t>(space);
    SpaceIndex::PostingMap map;
    DocOrdinal ord = 0;
    for (const auto& [id, bags] : docs_) {
      for (const auto& [term, tf] : bags[si]) map[term].push_back({ord, tf});
      ++ord;
    }
    bundle.spaces_[si] = SpaceIndex::from_postings(std::move(map), n);
  }
  docs_.clear();
  return bundle;
}

IndexBundle build_index(std::vector<DocRepresentation> reps) {
  return IndexBundle::build(std::move(reps));
}

}  // namespace ontovsm
