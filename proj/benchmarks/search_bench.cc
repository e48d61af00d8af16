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

#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "ontovsm/annotate.h"
#include "ontovsm/expand.h"
#include "ontovsm/index.h"
#include "ontovsm/rank.h"
#include "synthetic.h"

namespace ontovsm {
namespace {

void BM_Search(benchmark::State& state) {
  const auto model = static_cast<Model>(state.range(0));
  const auto c = testing::make_synthetic({.n_docs = 5000, .n_queries = 50});
  const Annotator annotator(c.kb, default_stopwords(), default_interrogative_map());
  std::vector<DocRepresentation> reps;
  for (const Document& d : testing::render_corpus(c)) {
    reps.push_back(represent_document(d.id, d.text, annotator));
  }
  const IndexBundle index = build_index(std::move(reps));
  const Searcher searcher(index, annotator);
  std::vector<std::string> queries;
  for (const auto& q : c.queries) queries.push_back(testing::render(q, c));
  const ModelConfig cfg = ModelConfig::create(model, {}, 0.5, 1000);
  for (auto _ : state) {
    for (const std::string& q : queries) benchmark::DoNotOptimize(searcher.search(q, cfg));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(queries.size()));
  state.SetLabel(std::string(model_name(model)));
}
BENCHMARK(BM_Search)->DenseRange(0, 4);

}  // namespace
}  // namespace ontovsm
