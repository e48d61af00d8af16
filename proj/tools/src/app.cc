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

#include "ontovsm_cli/app.h"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "ontovsm/errors.h"
#include "ontovsm_cli/commands.h"

namespace ontovsm::cli {
namespace {

struct ModelFlags {
  std::string model = "kw";
  double alpha = 0.5, wn = 0, wc = 0, wnc = 0, wi = 0;
  std::size_t k = 0;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* wn_opt = nullptr;
  CLI::Option* wc_opt = nullptr;
  CLI::Option* wnc_opt = nullptr;
  CLI::Option* wi_opt = nullptr;
  CLI::Option* k_opt = nullptr;

  void attach(CLI::App* sub) {
    sub->add_option("--model", model, "kw | ne | kw-union-ne | kw+ne | kw+ne+wh")
        ->check(CLI::IsMember({"kw", "ne", "kw-union-ne", "kw+ne", "kw+ne+wh"}));
    alpha_opt = sub->add_option("--alpha", alpha, "kw-union-ne mixing weight");
    wn_opt = sub->add_option("--wn", wn, "name-space weight");
    wc_opt = sub->add_option("--wc", wc, "class-space weight");
    wnc_opt = sub->add_option("--wnc", wnc, "name+class-space weight");
    wi_opt = sub->add_option("--wi", wi, "identifier-space weight");
    k_opt = sub->add_option("--k", k, "results per query");
  }

  void apply(RunConfig& cfg) const {
    cfg.model = *parse_model(model);
    auto maybe = [](CLI::Option* o, double v) {
      return o->count() ? std::optional<double>(v) : std::nullopt;
    };
    cfg.alpha = maybe(alpha_opt, alpha);
    cfg.w_n = maybe(wn_opt, wn);
    cfg.w_c = maybe(wc_opt, wc);
    cfg.w_nc = maybe(wnc_opt, wnc);
    cfg.w_i = maybe(wi_opt, wi);
    if (k_opt->count()) cfg.k = k;
  }
};

struct PathFlags {
  std::string kb, stopwords, wh_mapping;
  void attach(CLI::App* sub, bool kb_required, bool with_wh) {
    auto* kb_opt = sub->add_option("--kb", kb, "knowledge base TSV");
    if (kb_required) kb_opt->required();
    sub->add_option("--stopwords", stopwords, "stop-word list");
    if (with_wh) sub->add_option("--wh-mapping", wh_mapping, "interrogative map TSV");
  }
  void apply(RunConfig& cfg) const {
    cfg.kb_path = kb;
    if (!stopwords.empty()) cfg.stopword_path = stopwords;
    if (!wh_mapping.empty()) cfg.wh_mapping_path = wh_mapping;
  }
};

bool mentions(const std::vector<std::string>& args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.starts_with(flag + "=");
  });
}

// Removes `--config PATH` and appends every config entry the selected
// subcommand understands and the command line does not already set.
std::vector<std::string> merge_config(std::vector<std::string> args, CLI::App& app) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                 args.begin() + static_cast<std::ptrdiff_t>(i + 2));
      break;
    }
    if (args[i].starts_with("--config=")) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (!path) return args;
  CLI::App* sub = nullptr;
  for (const std::string& a : args) {
    if (a.starts_with("-")) continue;
    sub = app.get_subcommand_no_throw(a);
    break;
  }
  for (const auto& [key, value] : read_config(*path)) {
    bool known = false;
    for (CLI::App* s : app.get_subcommands({})) {
      if (s->get_option_no_throw("--" + key)) known = true;
    }
    if (!known) throw ValidationError("unknown config key '" + key + "'");
    if (sub && sub->get_option_no_throw("--" + key) && !mentions(args, "--" + key)) {
      args.push_back("--" + key);
      args.push_back(value);
    }
  }
  return args;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ontology-aware vector space retrieval"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");
  std::string config_path;
  app.add_option("--config", config_path, "TSV config file; flags take precedence");

  RunConfig cfg;
  std::string corpus, index_dir, queries, run_path, tag, qrels, out_path, run_a,
      run_b, query_text, doc_text, wh;
  unsigned workers = 1;
  std::uint64_t seed = 0, permutations = 100000;

  auto* index = app.add_subcommand("index", "annotate, expand and index a corpus");
  PathFlags index_paths;
  index_paths.attach(index, true, false);
  index->add_option("--corpus", corpus, "corpus file")->required();
  index->add_option("--index", index_dir, "index directory to write")->required();
  index->add_option("--workers", workers, "annotation threads");

  auto* search = app.add_subcommand("search", "rank documents for a query file");
  PathFlags search_paths;
  ModelFlags search_model;
  search_paths.attach(search, true, true);
  search_model.attach(search);
  search->add_option("--index", index_dir, "index directory")->required();
  search->add_option("--queries", queries, "query file")->required();
  search->add_option("--run", run_path, "TREC run file to write")->required();
  search->add_option("--tag", tag, "run tag (default: model name)");

  auto* eval = app.add_subcommand("eval", "score a run against qrels");
  eval->add_option("--run", run_path, "TREC run file")->required();
  eval->add_option("--qrels", qrels, "TREC qrels file")->required();
  eval->add_option("--out", out_path, "report TSV to write")->required();

  auto* sig = app.add_subcommand("sigtest", "paired randomization test on AP");
  sig->add_option("--run-a", run_a, "first run")->required();
  sig->add_option("--run-b", run_b, "second run")->required();
  sig->add_option("--qrels", qrels, "TREC qrels file")->required();
  sig->add_option("--permutations", permutations, "number of permutations")
      ->check(CLI::PositiveNumber);
  sig->add_option("--seed", seed, "permutation seed");
  sig->add_option("--workers", workers, "permutation threads");
  sig->add_option("--out", out_path, "report TSV to write")->required();

  auto* dump = app.add_subcommand("dump-terms", "print the expanded terms of a text");
  PathFlags dump_paths;
  ModelFlags dump_model;
  dump_paths.attach(dump, false, true);
  dump_model.attach(dump);
  auto* q_opt = dump->add_option("--query", query_text, "query text");
  auto* d_opt = dump->add_option("--document", doc_text, "document text");
  q_opt->excludes(d_opt);
  dump->add_option("--wh", wh, "interrogative class override");

  try {
    std::vector<std::string> merged = merge_config(args, app);
    std::reverse(merged.begin(), merged.end());
    app.parse(merged);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    cfg.index_dir = index_dir;
    cfg.corpus_path = corpus;
    cfg.workers = std::max(1U, workers);
    cfg.seed = seed;
    cfg.permutations = permutations;
    if (*index) {
      index_paths.apply(cfg);
      cmd_index(cfg);
    } else if (*search) {
      search_paths.apply(cfg);
      search_model.apply(cfg);
      cmd_search(cfg, queries, run_path, tag);
    } else if (*eval) {
      cmd_eval(run_path, qrels, out_path);
    } else if (*sig) {
      cmd_sigtest(cfg, run_a, run_b, qrels, out_path);
    } else if (*dump) {
      dump_paths.apply(cfg);
      dump_model.apply(cfg);
      if (!q_opt->count() && !d_opt->count()) {
        throw ValidationError("dump-terms needs --query or --document");
      }
      std::optional<ClassId> wh_override;
      if (!wh.empty()) wh_override = wh;
      cmd_dump_terms(cfg, d_opt->count() ? doc_text : query_text,
                     d_opt->count() > 0, wh_override, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace ontovsm::cli
