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

#include <gtest/gtest.h>

#include <cmath>

#include "ontovsm/errors.h"
#include "ontovsm/rank.h"
#include "oracle.h"
#include "synthetic.h"

namespace ontovsm {
namespace {

struct Fixture {
  testing::SyntheticCollection c = testing::make_synthetic();
  Annotator annotator{c.kb, default_stopwords(), default_interrogative_map()};
  std::vector<DocRepresentation> reps;
  IndexBundle index;

  Fixture() {
    for (const Document& d : testing::render_corpus(c)) {
      reps.push_back(represent_document(d.id, d.text, annotator));
    }
    index = build_index(reps);
  }
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

constexpr std::array<Model, 5> kModels = {Model::kKeyword, Model::kNamedEntity,
                                          Model::kKeywordUnionNE, Model::kKeywordPlusNE,
                                          Model::kKeywordPlusNEWh};

TEST(ModelConfig, Validation) {
  EXPECT_NO_THROW(ModelConfig::create(Model::kNamedEntity));
  EXPECT_NO_THROW(ModelConfig::create(Model::kNamedEntity, {0.1, 0.2, 0.3, 0.4}));
  EXPECT_THROW(ModelConfig::create(Model::kNamedEntity, {0.5, 0.5, 0.5, 0.5}),
               ValidationError);
  EXPECT_THROW(ModelConfig::create(Model::kNamedEntity, {-0.5, 0.5, 0.5, 0.5}),
               ValidationError);
  EXPECT_THROW(ModelConfig::create(Model::kKeywordUnionNE, {}, 1.5), ValidationError);
  EXPECT_THROW(ModelConfig::create(Model::kKeywordUnionNE, {}, -0.1), ValidationError);
  EXPECT_THROW(ModelConfig::create(Model::kKeyword, {}, 0.5, 0), ValidationError);
  EXPECT_THROW(ModelConfig::create(Model::kKeyword, {NAN, 0, 0, 1}), ValidationError);
}

TEST(ModelNames, RoundTrip) {
  for (Model m : kModels) EXPECT_EQ(parse_model(model_name(m)), m);
  EXPECT_EQ(model_name(Model::kKeywordUnionNE), "kw-union-ne");
  EXPECT_FALSE(parse_model("bm25").has_value());
}

TEST(Cosine, IdenticalBagScoresOne) {
  const Fixture& f = fixture();
  for (const DocRepresentation& r : f.reps) {
    const auto scores = cosine_score(r.bag(Space::kKeyword), f.index.space(Space::kKeyword));
    const auto d = *f.index.find_doc(r.doc_id);
    if (f.index.space(Space::kKeyword).doc_norm(d) == 0.0) continue;
    EXPECT_NEAR(scores.at(d), 1.0, 1e-12);
    for (const auto& [doc, s] : scores) EXPECT_LE(s, 1.0);
  }
}

TEST(Cosine, UnknownTermsAndEmptyQueries) {
  const Fixture& f = fixture();
  TermBag q;
  EXPECT_TRUE(cosine_score(q, f.index.space(Space::kKeyword)).empty());
  q.add(GeneralizedTerm::keyword("neverseen"));
  EXPECT_TRUE(cosine_score(q, f.index.space(Space::kKeyword)).empty());
}

TEST(Score, MatchesDenseOracleForEveryModel) {
  const Fixture& f = fixture();
  const testing::DenseOracle oracle(f.reps);
  const SpaceWeights w{0.1, 0.4, 0.2, 0.3};
  for (Model m : kModels) {
    const ModelConfig cfg = ModelConfig::create(
        m, m == Model::kNamedEntity || m == Model::kKeywordUnionNE ? w : SpaceWeights{},
        0.3);
    for (const auto& pieces : f.c.queries) {
      const auto q = represent_query(testing::render(pieces, f.c), m, f.annotator);
      const ScoreMap got = score(q, f.index, cfg);
      for (const auto& [id, want] : oracle.score(m, q, cfg.weights(), cfg.alpha())) {
        const auto it = got.find(*f.index.find_doc(id));
        EXPECT_NEAR(it == got.end() ? 0.0 : it->second, want, 1e-9)
            << model_name(m) << " " << id;
      }
    }
  }
}

TEST(Rank, SortsByScoreThenDocIdAndCuts) {
  IndexBundle idx;
  {
    std::vector<DocRepresentation> reps(4);
    for (int i = 0; i < 4; ++i) reps[i].doc_id = std::string(1, char('a' + i));
    idx = build_index(reps);
  }
  const ScoreMap scores = {{0, 0.5}, {1, 0.9}, {2, 0.5}, {3, 0.0}};
  const auto all = rank_results(scores, idx, std::nullopt);
  ASSERT_EQ(all.size(), 3U);
  EXPECT_EQ(all[0].doc_id, "b");
  EXPECT_EQ(all[1].doc_id, "a");
  EXPECT_EQ(all[2].doc_id, "c");
  const auto top2 = rank_results(scores, idx, 2);
  ASSERT_EQ(top2.size(), 2U);
  EXPECT_EQ(top2[1].doc_id, "a");
  EXPECT_EQ(rank_results(scores, idx, 10), all);
}

TEST(Search, DegenerateAlphas) {
  const Fixture& f = fixture();
  const Searcher searcher(f.index, f.annotator);
  for (const auto& pieces : f.c.queries) {
    const std::string text = testing::render(pieces, f.c);
    EXPECT_EQ(searcher.search(text, ModelConfig::create(Model::kKeywordUnionNE, {}, 0.0)),
              searcher.search(text, ModelConfig::create(Model::kKeyword)));
    EXPECT_EQ(searcher.search(text, ModelConfig::create(Model::kKeywordUnionNE, {}, 1.0)),
              searcher.search(text, ModelConfig::create(Model::kNamedEntity)));
  }
}

TEST(Search, QueryAnnotationOptionsPerModel) {
  EXPECT_TRUE(query_annotation_options(Model::kKeyword).treat_names_as_keywords);
  EXPECT_TRUE(query_annotation_options(Model::kKeywordUnionNE).treat_names_as_keywords);
  EXPECT_FALSE(query_annotation_options(Model::kKeywordPlusNE).treat_names_as_keywords);
  EXPECT_FALSE(query_annotation_options(Model::kKeywordPlusNE).map_interrogatives);
  EXPECT_TRUE(query_annotation_options(Model::kKeywordPlusNEWh).map_interrogatives);
}

TEST(Search, KeywordQueryUsesOnlyTheKeywordBag) {
  const Fixture& f = fixture();
  const auto q = represent_query(testing::render(f.c.queries[0], f.c), Model::kKeyword,
                                 f.annotator);
  for (Space s : kAllSpaces) {
    if (s != Space::kKeyword) EXPECT_TRUE(q.bag(s).empty());
  }
  EXPECT_FALSE(q.bag(Space::kKeyword).empty());
}

}  // namespace
}  // namespace ontovsm
