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

#include "ontovsm/rank.h"

#include <algorithm>
#include <array>
#include <cmath>

#include "ontovsm/errors.h"

namespace ontovsm {
namespace {

constexpr std::array<std::string_view, 5> kModelNames = {
    "kw", "ne", "kw-union-ne", "kw+ne", "kw+ne+wh"};

// out[d] += w * in[d] for every entry of `in`.
void accumulate(ScoreMap& out, const ScoreMap& in, double w) {
  for (const auto& [doc, s] : in) out[doc] += w * s;
}

}  // namespace

std::string_view model_name(Model m) {
  return kModelNames[static_cast<std::size_t>(m)];
}

std::optional<Model> parse_model(std::string_view name) {
  for (std::size_t i = 0; i < kModelNames.size(); ++i) {
    if (kModelNames[i] == name) return static_cast<Model>(i);
  }
  return std::nullopt;
}

ModelConfig ModelConfig::create(Model model, SpaceWeights weights, double alpha,
                                std::optional<std::size_t> k) {
  for (double w : {weights.name, weights.cls, weights.name_class,
                   weights.identifier}) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw ValidationError("space weights must be non-negative");
    }
  }
  const double sum =
      weights.name + weights.cls + weights.name_class + weights.identifier;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw ValidationError("space weights must sum to 1 (got " +
                          std::to_string(sum) + ")");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw ValidationError("alpha must lie in [0, 1]");
  }
  if (k && *k == 0) throw ValidationError("k must be positive");
  ModelConfig cfg;
  cfg.model_ = model;
  cfg.weights_ = weights;
  cfg.alpha_ = alpha;
  cfg.k_ = k;
  return cfg;
}

ScoreMap cosine_score(const TermBag& query, const SpaceIndex& space) {
  ScoreMap dot;
  double query_norm_sq = 0.0;
  const std::uint32_t n = space.n_docs();
  for (const auto& [term, tf] : query) {
    const std::uint32_t df = space.df(term);
    if (df == 0) continue;
    const double wq = tfidf_weight(tf, df, n);
    if (wq == 0.0) continue;
    query_norm_sq += wq * wq;
    for (const Posting& p : space.postings(term)) {
      dot[p.doc] += wq * tfidf_weight(p.tf, df, n);
    }
  }
  const double query_norm = std::sqrt(query_norm_sq);
  if (query_norm == 0.0) return {};
  for (auto& [doc, s] : dot) {
    const double doc_norm = space.doc_norm(doc);
    s = doc_norm == 0.0 ? 0.0 : std::min(1.0, s / (query_norm * doc_norm));
  }
  return dot;
}

ScoreMap score_keyword(const DocRepresentation& q, const IndexBundle& idx) {
  return cosine_score(q.bag(Space::kKeyword), idx.space(Space::kKeyword));
}

ScoreMap score_ne(const DocRepresentation& q, const IndexBundle& idx,
                  const ModelConfig& cfg) {
  const SpaceWeights& w = cfg.weights();
  const std::array<std::pair<Space, double>, 4> parts = {{
      {Space::kName, w.name},
      {Space::kClass, w.cls},
      {Space::kNameClass, w.name_class},
      {Space::kIdentifier, w.identifier},
  }};
  ScoreMap total;
  for (const auto& [space, weight] : parts) {
    if (weight == 0.0) continue;
    accumulate(total, cosine_score(q.bag(space), idx.space(space)), weight);
  }
  return total;
}

ScoreMap score_kw_union_ne(const DocRepresentation& q, const IndexBundle& idx,
                           const ModelConfig& cfg) {
  const double alpha = cfg.alpha();
  const ScoreMap ne = score_ne(q, idx, cfg);
  const ScoreMap kw = score_keyword(q, idx);
  ScoreMap total;
  for (const auto& [doc, s] : ne) {
    auto it = kw.find(doc);
    total[doc] = alpha * s + (1.0 - alpha) * (it == kw.end() ? 0.0 : it->second);
  }
  for (const auto& [doc, s] : kw) {
    if (!ne.contains(doc)) total[doc] = (1.0 - alpha) * s;
  }
  return total;
}

ScoreMap score_generalized(const DocRepresentation& q, const IndexBundle& idx) {
  return cosine_score(q.bag(Space::kGeneralized), idx.space(Space::kGeneralized));
}

ScoreMap score(const DocRepresentation& q, const IndexBundle& idx,
               const ModelConfig& cfg) {
  switch (cfg.model()) {
    case Model::kKeyword:
      return score_keyword(q, idx);
    case Model::kNamedEntity:
      return score_ne(q, idx, cfg);
    case Model::kKeywordUnionNE:
      return score_kw_union_ne(q, idx, cfg);
    case Model::kKeywordPlusNE:
    case Model::kKeywordPlusNEWh:
      return score_generalized(q, idx);
  }
  return {};
}

std::vector<ScoredDoc> rank_results(const ScoreMap& scores,
                                    const IndexBundle& idx,
                                    std::optional<std::size_t> k) {
  std::vector<std::pair<DocOrdinal, double>> hits;
  hits.reserve(scores.size());
  for (const auto& [doc, s] : scores) {
    if (s > 0.0) hits.emplace_back(doc, s);
  }
  // Ordinals follow doc id order, so comparing ordinals breaks ties by id.
  auto better = [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  };
  if (k && *k < hits.size()) {
    std::partial_sort(hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(*k),
                      hits.end(), better);
    hits.resize(*k);
  } else {
    std::sort(hits.begin(), hits.end(), better);
  }
  std::vector<ScoredDoc> out;
  out.reserve(hits.size());
  for (const auto& [doc, s] : hits) out.push_back({idx.doc_id(doc), s});
  return out;
}

AnnotationOptions query_annotation_options(Model model) {
  AnnotationOptions opts;
  switch (model) {
    case Model::kKeyword:
    case Model::kNamedEntity:
    case Model::kKeywordUnionNE:
      opts.treat_names_as_keywords = true;
      break;
    case Model::kKeywordPlusNE:
      opts.treat_names_as_keywords = false;
      break;
    case Model::kKeywordPlusNEWh:
      opts.treat_names_as_keywords = false;
      opts.map_interrogatives = true;
      break;
  }
  return opts;
}

DocRepresentation represent_query(std::string_view text, Model model,
                                  const Annotator& annotator,
                                  std::optional<ClassId> wh_override) {
  AnnotationOptions opts = query_annotation_options(model);
  if (opts.map_interrogatives) opts.wh_override = std::move(wh_override);
  const AnnotatedText at = annotator.annotate(text, opts);
  switch (model) {
    case Model::kKeyword: {
      DocRepresentation full =
          expand_query(at, annotator.kb(), ExpansionModel::kMultiVector, false);
      DocRepresentation rep;
      rep.bag(Space::kKeyword) = std::move(full.bag(Space::kKeyword));
      return rep;
    }
    case Model::kNamedEntity:
    case Model::kKeywordUnionNE:
      return expand_query(at, annotator.kb(), ExpansionModel::kMultiVector, false);
    case Model::kKeywordPlusNE:
      return expand_query(at, annotator.kb(), ExpansionModel::kGeneralized, false);
    case Model::kKeywordPlusNEWh:
      return expand_query(at, annotator.kb(), ExpansionModel::kGeneralized, true);
  }
  return {};
}

std::vector<ScoredDoc> Searcher::search(std::string_view query_text,
                                        const ModelConfig& cfg,
                                        std::optional<ClassId> wh_override) const {
  const DocRepresentation q =
      represent_query(query_text, cfg.model(), *annotator_, std::move(wh_override));
  return rank_results(score(q, *index_, cfg), *index_, cfg.k());
}

std::vector<ScoredDoc> search(std::string_view query_text,
                              const IndexBundle& idx, const Annotator& annotator,
                              const ModelConfig& cfg) {
  return Searcher(idx, annotator).search(query_text, cfg);
}

}  // namespace ontovsm
