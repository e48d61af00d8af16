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

#include "ontovsm_cli/commands.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "ontovsm/corpus_io.h"
#include "ontovsm/errors.h"
#include "ontovsm/expand.h"
#include "ontovsm/index.h"
#include "ontovsm/index_io.h"
#include "ontovsm/kb.h"
#include "ontovsm/text.h"
#include "ontovsm/trec_io.h"

namespace ontovsm::cli {
namespace fs = std::filesystem;
namespace {

constexpr const char* kFingerprintFile = "fingerprint.tsv";

std::string read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read '" + p.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

fs::path temp_sibling(const fs::path& target) {
  fs::path tmp = target;
  tmp += ".tmp-" + std::to_string(::getpid());
  return tmp;
}

// Writes to a temporary file and renames it over `target` on commit().
class AtomicOutput {
 public:
  explicit AtomicOutput(fs::path target)
      : target_(std::move(target)), tmp_(temp_sibling(target_)) {
    out_.open(tmp_, std::ios::binary | std::ios::trunc);
    if (!out_) throw Error("cannot write '" + target_.string() + "'");
  }
  ~AtomicOutput() {
    if (!committed_) {
      out_.close();
      std::error_code ec;
      fs::remove(tmp_, ec);
    }
  }
  AtomicOutput(const AtomicOutput&) = delete;
  AtomicOutput& operator=(const AtomicOutput&) = delete;

  std::ostream& stream() { return out_; }

  void commit() {
    out_.close();
    if (!out_) throw Error("write failed for '" + target_.string() + "'");
    fs::rename(tmp_, target_);
    committed_ = true;
  }

 private:
  fs::path target_;
  fs::path tmp_;
  std::ofstream out_;
  bool committed_ = false;
};

std::vector<Space> model_spaces(Model m) {
  switch (m) {
    case Model::kKeyword:
      return {Space::kKeyword};
    case Model::kNamedEntity:
      return {Space::kName, Space::kClass, Space::kNameClass, Space::kIdentifier};
    case Model::kKeywordUnionNE:
      return {Space::kKeyword, Space::kName, Space::kClass, Space::kNameClass,
              Space::kIdentifier};
    case Model::kKeywordPlusNE:
    case Model::kKeywordPlusNEWh:
      return {Space::kGeneralized};
  }
  return {};
}

std::vector<DocRepresentation> represent_all(const std::vector<Document>& docs,
                                             const Annotator& annotator,
                                             unsigned workers) {
  std::vector<DocRepresentation> reps(docs.size());
  workers = std::max(1U, std::min<unsigned>(workers, docs.size() ? docs.size() : 1));
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < docs.size(); i += workers) {
            reps[i] = represent_document(docs[i].id, docs[i].text, annotator);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reps;
}

}  // namespace

void validate_model_options(const RunConfig& cfg) {
  const Model m = cfg.model;
  const bool has_weights = cfg.w_n || cfg.w_c || cfg.w_nc || cfg.w_i;
  if (has_weights && m != Model::kNamedEntity && m != Model::kKeywordUnionNE) {
    throw ValidationError("space weights apply only to the ne and kw-union-ne models");
  }
  if (cfg.alpha && m != Model::kKeywordUnionNE) {
    throw ValidationError("alpha applies only to the kw-union-ne model");
  }
  if (m == Model::kKeywordPlusNEWh && !cfg.wh_mapping_path) {
    throw ValidationError("the kw+ne+wh model requires --wh-mapping");
  }
  if (m != Model::kKeywordPlusNEWh && cfg.wh_mapping_path) {
    throw ValidationError("--wh-mapping applies only to the kw+ne+wh model");
  }
}

ModelConfig make_model_config(const RunConfig& cfg) {
  validate_model_options(cfg);
  SpaceWeights w;
  if (cfg.w_n || cfg.w_c || cfg.w_nc || cfg.w_i) {
    w.name = cfg.w_n.value_or(0.0);
    w.cls = cfg.w_c.value_or(0.0);
    w.name_class = cfg.w_nc.value_or(0.0);
    w.identifier = cfg.w_i.value_or(0.0);
  }
  return ModelConfig::create(cfg.model, w, cfg.alpha.value_or(0.5), cfg.k);
}

StopWordSet load_stopwords(const RunConfig& cfg) {
  return cfg.stopword_path ? read_stopwords(*cfg.stopword_path) : default_stopwords();
}

InterrogativeMap load_interrogatives(const RunConfig& cfg) {
  return cfg.wh_mapping_path ? read_interrogative_map(*cfg.wh_mapping_path)
                             : InterrogativeMap{};
}

std::string fingerprint(const RunConfig& cfg) {
  const StopWordSet stop = load_stopwords(cfg);
  std::vector<std::string> words(stop.begin(), stop.end());
  std::sort(words.begin(), words.end());
  std::string joined;
  for (const std::string& w : words) joined += w + '\n';
  return "kb\t" + hex(fnv1a(read_bytes(cfg.kb_path))) + "\nstopwords\t" +
         hex(fnv1a(joined)) + '\n';
}

void cmd_index(const RunConfig& cfg) {
  if (cfg.index_dir.empty()) throw ValidationError("--index is required");
  const KnowledgeBase kb = load_kb(cfg.kb_path);
  const std::vector<Document> docs = read_corpus(cfg.corpus_path);
  const Annotator annotator(kb, load_stopwords(cfg));
  const IndexBundle bundle =
      build_index(represent_all(docs, annotator, cfg.workers));

  const fs::path staging = temp_sibling(cfg.index_dir);
  try {
    fs::remove_all(staging);
    write_index(bundle, staging);
    std::ofstream fp(staging / kFingerprintFile, std::ios::binary);
    fp << fingerprint(cfg);
    fp.close();
    if (!fp) throw Error("cannot write fingerprint");
    fs::remove_all(cfg.index_dir);
    fs::rename(staging, cfg.index_dir);
  } catch (...) {
    std::error_code ec;
    fs::remove_all(staging, ec);
    throw;
  }
}

void cmd_search(const RunConfig& cfg, const fs::path& queries,
                const fs::path& run_out, const std::string& tag) {
  const ModelConfig model = make_model_config(cfg);
  if (read_bytes(cfg.index_dir / kFingerprintFile) != fingerprint(cfg)) {
    throw ValidationError("index fingerprint mismatch: '" + cfg.index_dir.string() +
                          "' was built with a different KB or stop-word list");
  }
  const KnowledgeBase kb = load_kb(cfg.kb_path);
  const IndexBundle index = read_index(cfg.index_dir);
  const Annotator annotator(kb, load_stopwords(cfg), load_interrogatives(cfg));
  const std::vector<QueryRecord> records = read_queries(queries);
  const Searcher searcher(index, annotator);
  const std::string run_tag = tag.empty() ? std::string(model_name(cfg.model)) : tag;

  AtomicOutput out(run_out);
  for (const QueryRecord& q : records) {
    write_run(out.stream(), q.id, searcher.search(q.text, model, q.wh_override),
              run_tag);
  }
  out.commit();
}

EvalReport cmd_eval(const fs::path& run, const fs::path& qrels,
                    const fs::path& out_path) {
  const EvalReport report = evaluate_run(read_run(run), read_qrels(qrels));
  AtomicOutput out(out_path);
  write_eval_report(out.stream(), report);
  out.commit();
  return report;
}

SigTestResult cmd_sigtest(const RunConfig& cfg, const fs::path& run_a,
                          const fs::path& run_b, const fs::path& qrels,
                          const fs::path& out_path) {
  const PairedAps aps =
      paired_average_precisions(read_run(run_a), read_run(run_b), read_qrels(qrels));
  const SigTestResult r =
      randomization_test(aps.a, aps.b, cfg.permutations, cfg.seed, cfg.workers);
  AtomicOutput out(out_path);
  write_sigtest_report(out.stream(), r);
  out.commit();
  return r;
}

void cmd_dump_terms(const RunConfig& cfg, std::string_view text, bool as_document,
                    std::optional<ClassId> wh_override, std::ostream& out) {
  validate_model_options(cfg);
  const KnowledgeBase kb =
      cfg.kb_path.empty() ? KnowledgeBase{} : load_kb(cfg.kb_path);
  const Annotator annotator(kb, load_stopwords(cfg), load_interrogatives(cfg));
  const DocRepresentation rep =
      as_document ? represent_document("", text, annotator)
                  : represent_query(text, cfg.model, annotator, std::move(wh_override));
  for (Space s : model_spaces(cfg.model)) {
    for (const auto& [term, count] : rep.bag(s)) {
      out << space_name(s) << '\t' << term.display() << '\t' << count << '\n';
    }
  }
}

std::map<std::string, std::string> read_config(const fs::path& path) {
  std::istringstream in(read_bytes(path));
  std::map<std::string, std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError(path.string(), line_no, "expected key<TAB>value");
    }
    std::string key(trim(std::string_view(line).substr(0, tab)));
    std::string value(trim(std::string_view(line).substr(tab + 1)));
    if (!out.emplace(key, value).second) {
      throw ParseError(path.string(), line_no, "duplicate key '" + key + "'");
    }
  }
  return out;
}

}  // namespace ontovsm::cli
