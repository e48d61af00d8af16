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

#ifndef ONTOVSM_PORTER_STEMMER_H_
#define ONTOVSM_PORTER_STEMMER_H_

#include <string>
#include <string_view>

namespace ontovsm {

// Porter (1980) suffix-stripping stemmer. Expects a lower-case word; words
// of two letters or fewer, and words containing anything other than ASCII
// lower-case letters, are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace ontovsm

#endif  // ONTOVSM_PORTER_STEMMER_H_
