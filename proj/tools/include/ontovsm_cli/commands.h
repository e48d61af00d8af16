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

#ifndef ONTOVSM_CLI_COMMANDS_H_
#define ONTOVSM_CLI_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ontovsm/annotate.h"
#include "ontovsm/rank.h"
#include "ontovsm/report.h"
#include "ontovsm/sigtest.h"

namespace ontovsm::cli {

struct RunConfig {
  std::filesystem::path kb_path;
  std::filesystem::path corpus_path;
  std::filesystem::path index_dir;
  Model model = Model::kKeyword;
  std::optional<double> alpha;
  std::optional<double> w_n;
  std::optional<double> w_c;
  std::optional<double> w_nc;
  std::optional<double> w_i;
  std::optional<std::filesystem::path> stopword_path;
  std::optional<std::filesystem::path> wh_mapping_path;
  std::optional<std::size_t> k;
  std::uint64_t seed = 0;
  std::uint64_t permutations = 100000;
  unsigned workers = 1;
};

// Throws ValidationError when a knob does not apply to cfg.model, or a
// required one is missing: the wh mapping is required for kw+ne+wh and
// accepted nowhere else, space weights only for ne and kw-union-ne, alpha
// only for kw-union-ne.
void validate_model_options(const RunConfig& cfg);

// Validates, then fills unset weights with 0.25 and alpha with 0.5.
ModelConfig make_model_config(const RunConfig& cfg);

StopWordSet load_stopwords(const RunConfig& cfg);
InterrogativeMap load_interrogatives(const RunConfig& cfg);

// Text identifying the KB and stop-word list an index was built with.
std::string fingerprint(const RunConfig& cfg);

// Every command writes its primary output through a temporary sibling that
// is renamed into place on success, so failures leave nothing behind.
void cmd_index(const RunConfig& cfg);
void cmd_search(const RunConfig& cfg, const std::filesystem::path& queries,
                const std::filesystem::path& run_out, const std::string& tag);
EvalReport cmd_eval(const std::filesystem::path& run,
                    const std::filesystem::path& qrels,
                    const std::filesystem::path& out);
SigTestResult cmd_sigtest(const RunConfig& cfg, const std::filesystem::path& run_a,
                          const std::filesystem::path& run_b,
                          const std::filesystem::path& qrels,
                          const std::filesystem::path& out);

// Prints `space <TAB> term <TAB> count` for the spaces `cfg.model` scores,
// using the display notation. `as_document` selects index-time expansion.
void cmd_dump_terms(const RunConfig& cfg, std::string_view text,
                    bool as_document, std::optional<ClassId> wh_override,
                    std::ostream& out);

// `key <TAB> value` lines; blank lines and `#` comments are skipped.
std::map<std::string, std::string> read_config(const std::filesystem::path& path);

}  // namespace ontovsm::cli

#endif  // ONTOVSM_CLI_COMMANDS_H_
