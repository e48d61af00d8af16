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

#ifndef ONTOVSM_ANNOTATE_H_
#define ONTOVSM_ANNOTATE_H_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "ontovsm/kb.h"

namespace ontovsm {

// Half-open byte range [begin, end) into the source text.
struct CharSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool overlaps(const CharSpan& o) const {
    return begin < o.end && o.begin < end;
  }
  friend bool operator==(const CharSpan&, const CharSpan&) = default;
};

struct Token {
  std::string surface;  // as written
  std::string stem;     // case-folded, stemmed; never empty
  CharSpan span;

  friend bool operator==(const Token&, const Token&) = default;
};

// One recognized named-entity mention. Unset slots are unspecified ('*').
// At least one slot is set; when entity_id is set so are name and class_id.
struct EntityAnnotation {
  CharSpan span;
  std::string surface;
  std::optional<std::string> name;
  std::optional<ClassId> class_id;
  std::optional<EntityId> entity_id;

  friend bool operator==(const EntityAnnotation&,
                         const EntityAnnotation&) = default;
};

struct AnnotatedText {
  std::string source;
  std::vector<Token> keywords;
  std::vector<EntityAnnotation> entities;  // sorted, non-overlapping
  std::vector<ClassId> wh_classes;

  friend bool operator==(const AnnotatedText&, const AnnotatedText&) = default;
};

// Case-folded stop words.
using StopWordSet = std::unordered_set<std::string>;

// Case-folded interrogative word -> entity class.
using InterrogativeMap = std::map<std::string, ClassId>;

// A general-purpose English stop list (includes the interrogatives).
const StopWordSet& default_stopwords();

// Who/Which -> Person, Where -> Location, When -> DayTime.
const InterrogativeMap& default_interrogative_map();

// The six interrogatives that can head a question.
bool is_interrogative_word(std::string_view folded_word);

// Splits on non-word boundaries, case-folds, drops stop words and stems.
std::vector<Token> tokenize_keywords(std::string_view text,
                                     const StopWordSet& stopwords);

// Dictionary recognizer over the KB's entity names, aliases and class
// labels. Leftmost-longest, non-overlapping, word-boundary aligned matches
// on the normalized text.
class Gazetteer {
 public:
  explicit Gazetteer(const KnowledgeBase& kb);
  ~Gazetteer();
  Gazetteer(Gazetteer&&) noexcept;
  Gazetteer& operator=(Gazetteer&&) noexcept;

  std::vector<EntityAnnotation> recognize(std::string_view text) const;

 private:
  struct Node;
  const KnowledgeBase* kb_;
  std::unique_ptr<Node> root_;
};

// Builds a Gazetteer for `kb` and runs it once.
std::vector<EntityAnnotation> recognize_entities(std::string_view text,
                                                 const KnowledgeBase& kb);

std::optional<ClassId> map_interrogative(std::string_view word,
                                         const InterrogativeMap& mapping);

struct AnnotationOptions {
  // Multi-vector models keep entity-name tokens as keywords; the
  // generalized-term model removes them.
  bool treat_names_as_keywords = true;
  bool map_interrogatives = false;
  // Per-query override of the interrogative mapping. An empty string
  // suppresses the wh class entirely.
  std::optional<ClassId> wh_override;
};

// Tokenizer + recognizer + interrogative mapping bound to one KB. The KB
// must outlive the annotator. Thread-safe for concurrent annotate() calls.
class Annotator {
 public:
  Annotator(const KnowledgeBase& kb, StopWordSet stopwords,
            InterrogativeMap interrogatives = {});

  AnnotatedText annotate(std::string_view text,
                         const AnnotationOptions& opts) const;

  const KnowledgeBase& kb() const { return *kb_; }
  const StopWordSet& stopwords() const { return stopwords_; }
  const InterrogativeMap& interrogatives() const { return interrogatives_; }

 private:
  const KnowledgeBase* kb_;
  StopWordSet stopwords_;
  InterrogativeMap interrogatives_;
  Gazetteer gazetteer_;
};

AnnotatedText annotate(std::string_view text, const KnowledgeBase& kb,
                       const AnnotationOptions& opts,
                       const StopWordSet& stopwords = default_stopwords(),
                       const InterrogativeMap& interrogatives = {});

}  // namespace ontovsm

#endif  // ONTOVSM_ANNOTATE_H_
