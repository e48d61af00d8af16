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

#ifndef ONTOVSM_RANK_H_
#define ONTOVSM_RANK_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ontovsm/annotate.h"
#include "ontovsm/expand.h"
#include "ontovsm/index.h"
#include "ontovsm/kb.h"

namespace ontovsm {

enum class Model {
  kKeyword,           // KW: classic tf-idf cosine on keywords
  kNamedEntity,       // NE: weighted sum of the four ontological cosines
  kKeywordUnionNE,    // KW∪NE: alpha * NE + (1 - alpha) * KW
  kKeywordPlusNE,     // KW+NE: one cosine over generalized terms
  kKeywordPlusNEWh,   // KW+NE+Wh: KW+NE with interrogatives mapped to classes
};

// "kw", "ne", "kw-union-ne", "kw+ne", "kw+ne+wh".
std::string_view model_name(Model m);
std::optional<Model> parse_model(std::string_view name);

struct SpaceWeights {
  double name = 0.25;
  double cls = 0.25;
  double name_class = 0.25;
  double identifier = 0.25;
};

// Validated scoring configuration.
class ModelConfig {
 public:
  // Throws ValidationError unless the weights are non-negative and sum to 1
  // (within 1e-9), alpha lies in [0, 1] and k, when given, is positive.
  // A k of nullopt means no cutoff.
  static ModelConfig create(Model model, SpaceWeights weights = {},
                            double alpha = 0.5,
                            std::optional<std::size_t> k = std::nullopt);

  Model model() const { return model_; }
  const SpaceWeights& weights() const { return weights_; }
  double alpha() const { return alpha_; }
  std::optional<std::size_t> k() const { return k_; }

 private:
  ModelConfig() = default;
  Model model_ = Model::kKeyword;
  SpaceWeights weights_;
  double alpha_ = 0.5;
  std::optional<std::size_t> k_;
};

struct ScoredDoc {
  std::string doc_id;
  double score = 0.0;

  friend bool operator==(const ScoredDoc&, const ScoredDoc&) = default;
};

using ScoreMap = std::unordered_map<DocOrdinal, double>;

// Cosine between the query bag and every document sharing at least one
// term with it. Query terms are weighted with the space's df and n_docs;
// query terms the space has never seen carry no weight. A zero norm on
// either side yields score 0.
ScoreMap cosine_score(const TermBag& query, const SpaceIndex& space);

ScoreMap score_keyword(const DocRepresentation& q, const IndexBundle& idx);
ScoreMap score_ne(const DocRepresentation& q, const IndexBundle& idx,
                  const ModelConfig& cfg);
ScoreMap score_kw_union_ne(const DocRepresentation& q, const IndexBundle& idx,
                           const ModelConfig& cfg);
ScoreMap score_generalized(const DocRepresentation& q, const IndexBundle& idx);

// Dispatches on cfg.model().
ScoreMap score(const DocRepresentation& q, const IndexBundle& idx,
               const ModelConfig& cfg);

// Positive-score documents sorted by score descending, ties by ascending
// doc id, truncated to k.
std::vector<ScoredDoc> rank_results(const ScoreMap& scores,
                                    const IndexBundle& idx,
                                    std::optional<std::size_t> k);

// Annotation options and expansion used for a query under `model`.
AnnotationOptions query_annotation_options(Model model);
DocRepresentation represent_query(std::string_view text, Model model,
                                  const Annotator& annotator,
                                  std::optional<ClassId> wh_override = {});

// Query-time pipeline over a built index. Index, KB and annotator must
// outlive the searcher; any number of threads may call search().
class Searcher {
 public:
  Searcher(const IndexBundle& index, const Annotator& annotator)
      : index_(&index), annotator_(&annotator) {}

  std::vector<ScoredDoc> search(std::string_view query_text,
                                const ModelConfig& cfg,
                                std::optional<ClassId> wh_override = {}) const;

 private:
  const IndexBundle* index_;
  const Annotator* annotator_;
};

std::vector<ScoredDoc> search(std::string_view query_text,
                              const IndexBundle& idx, const Annotator& annotator,
                              const ModelConfig& cfg);

}  // namespace ontovsm

#endif  // ONTOVSM_RANK_H_
