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

#include "ontovsm/annotate.h"

#include <algorithm>
#include <utility>

#include "ontovsm/porter_stemmer.h"
#include "ontovsm/text.h"

namespace ontovsm {

const StopWordSet& default_stopwords() {
  static const StopWordSet kWords = {
      "a",       "about",   "above",   "after",   "again",   "against",
      "all",     "also",    "am",      "an",      "and",     "any",
      "are",     "as",      "at",      "be",      "because", "been",
      "before",  "being",   "below",   "between", "both",    "but",
      "by",      "can",     "could",   "did",     "do",      "does",
      "doing",   "down",    "during",  "each",    "few",     "for",
      "from",    "further", "had",     "has",     "have",    "having",
      "he",      "her",     "here",    "hers",    "herself", "him",
      "himself", "his",     "how",     "i",       "if",      "in",
      "into",    "is",      "it",      "its",     "itself",  "just",
      "me",      "might",   "more",    "most",    "much",    "must",
      "my",      "myself",  "no",      "nor",     "not",     "now",
      "of",      "off",     "on",      "once",    "only",    "or",
      "other",   "our",     "ours",    "out",     "over",    "own",
      "same",    "several", "she",     "should",  "so",      "some",
      "such",    "than",    "that",    "the",     "their",   "theirs",
      "them",    "then",    "there",   "these",   "they",    "this",
      "those",   "through", "to",      "too",     "under",   "until",
      "up",      "upon",    "us",      "very",    "was",     "we",
      "were",    "what",    "when",    "where",   "which",   "while",
      "who",     "whom",    "whose",   "why",     "will",    "with",
      "would",   "you",     "your",    "yours",   "yourself",
  };
  return kWords;
}

const InterrogativeMap& default_interrogative_map() {
  static const InterrogativeMap kMap = {
      {"who", "Person"},
      {"which", "Person"},
      {"where", "Location"},
      {"when", "DayTime"},
  };
  return kMap;
}

bool is_interrogative_word(std::string_view w) {
  return w == "who" || w == "what" || w == "which" || w == "when" ||
         w == "where" || w == "how";
}

namespace {

struct WordRun {
  std::string_view text;
  CharSpan span;
};

std::vector<WordRun> word_runs(std::string_view text) {
  std::vector<WordRun> runs;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_word_byte(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && is_word_byte(text[i])) ++i;
    runs.push_back({text.substr(start, i - start), {start, i}});
  }
  return runs;
}

}  // namespace

std::vector<Token> tokenize_keywords(std::string_view text,
                                     const StopWordSet& stopwords) {
  std::vector<Token> tokens;
  for (const WordRun& run : word_runs(text)) {
    std::string folded = fold_case(run.text);
    if (stopwords.contains(folded)) continue;
    std::string stem = porter_stem(folded);
    if (stem.empty()) continue;
    tokens.push_back({std::string(run.text), std::move(stem), run.span});
  }
  return tokens;
}

// Byte trie over normalized surface forms. Payload pointers refer into the
// owning KnowledgeBase, whose maps are never mutated after build.
struct Gazetteer::Node {
  std::map<char, std::unique_ptr<Node>> children;
  const std::vector<EntityId>* entities = nullptr;
  const ClassId* label_class = nullptr;

  Node* child_or_insert(char c) {
    auto& slot = children[c];
    if (!slot) slot = std::make_unique<Node>();
    return slot.get();
  }
  const Node* child(char c) const {
    auto it = children.find(c);
    return it == children.end() ? nullptr : it->second.get();
  }
  bool terminal() const { return entities != nullptr || label_class != nullptr; }
};

Gazetteer::Gazetteer(const KnowledgeBase& kb)
    : kb_(&kb), root_(std::make_unique<Node>()) {
  for (const auto& [surface, ids] : kb.name_index()) {
    Node* n = root_.get();
    for (char c : surface) n = n->child_or_insert(c);
    n->entities = &ids;
  }
  for (const auto& [label, cls] : kb.class_label_index()) {
    Node* n = root_.get();
    for (char c : label) n = n->child_or_insert(c);
    n->label_class = &cls;
  }
}

Gazetteer::~Gazetteer() = default;
Gazetteer::Gazetteer(Gazetteer&&) noexcept = default;
Gazetteer& Gazetteer::operator=(Gazetteer&&) noexcept = default;

std::vector<EntityAnnotation> Gazetteer::recognize(
    std::string_view text) const {
  // Normalized copy of the text with a map back to source offsets; this is
  // the same normalization the name index was built with.
  std::string norm;
  std::vector<std::size_t> origin;
  norm.reserve(text.size());
  origin.reserve(text.size());
  bool pending_space = false;
  std::size_t space_at = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (is_space_byte(c)) {
      if (!pending_space) space_at = i;
      pending_space = !norm.empty();
      continue;
    }
    if (pending_space) {
      norm.push_back(' ');
      origin.push_back(space_at);
      pending_space = false;
    }
    norm.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    origin.push_back(i);
  }

  const std::size_t n = norm.size();
  auto start_ok = [&](std::size_t s) {
    return norm[s] != ' ' &&
           (s == 0 || !is_word_byte(norm[s - 1]) || !is_word_byte(norm[s]));
  };
  auto end_ok = [&](std::size_t e) {
    return e == n || !is_word_byte(norm[e]) || !is_word_byte(norm[e - 1]);
  };

  std::vector<EntityAnnotation> out;
  std::size_t s = 0;
  while (s < n) {
    if (!start_ok(s)) {
      ++s;
      continue;
    }
    const Node* node = root_.get();
    const Node* best = nullptr;
    std::size_t best_end = 0;
    for (std::size_t e = s; e < n; ++e) {
      node = node->child(norm[e]);
      if (node == nullptr) break;
      if (node->terminal() && end_ok(e + 1)) {
        best = node;
        best_end = e + 1;
      }
    }
    if (best == nullptr) {
      ++s;
      continue;
    }

    EntityAnnotation a;
    a.span = {origin[s], origin[best_end - 1] + 1};
    a.surface = std::string(text.substr(a.span.begin, a.span.end - a.span.begin));
    if (best->entities != nullptr) {
      const std::vector<EntityId>& ids = *best->entities;
      if (ids.size() == 1) {
        const EntityDef& e = kb_->entity(ids.front());
        a.name = e.canonical_name;
        a.class_id = e.class_id;
        a.entity_id = e.id;
      } else {
        a.name = a.surface;
        const ClassId& first_class = kb_->entity(ids.front()).class_id;
        const bool shared = std::all_of(ids.begin(), ids.end(), [&](const auto& id) {
          return kb_->entity(id).class_id == first_class;
        });
        if (shared) a.class_id = first_class;
      }
    } else {
      a.class_id = *best->label_class;
    }
    out.push_back(std::move(a));
    s = best_end;
  }
  return out;
}

std::vector<EntityAnnotation> recognize_entities(std::string_view text,
                                                 const KnowledgeBase& kb) {
  return Gazetteer(kb).recognize(text);
}

std::optional<ClassId> map_interrogative(std::string_view word,
                                         const InterrogativeMap& mapping) {
  auto it = mapping.find(fold_case(trim(word)));
  if (it == mapping.end()) return std::nullopt;
  return it->second;
}

Annotator::Annotator(const KnowledgeBase& kb, StopWordSet stopwords,
                     InterrogativeMap interrogatives)
    : kb_(&kb),
      stopwords_(std::move(stopwords)),
      interrogatives_(),
      gazetteer_(kb) {
  for (auto& [word, cls] : interrogatives) {
    interrogatives_.emplace(fold_case(trim(word)), cls);
  }
}

AnnotatedText Annotator::annotate(std::string_view text,
                                  const AnnotationOptions& opts) const {
  AnnotatedText at;
  at.source = std::string(text);
  at.entities = gazetteer_.recognize(text);
  at.keywords = tokenize_keywords(text, stopwords_);

  if (!opts.treat_names_as_keywords && !at.entities.empty()) {
    // Both lists are sorted by offset.
    std::vector<Token> kept;
    std::size_t e = 0;
    for (Token& t : at.keywords) {
      while (e < at.entities.size() && at.entities[e].span.end <= t.span.begin) {
        ++e;
      }
      if (e < at.entities.size() && at.entities[e].span.overlaps(t.span)) {
        continue;
      }
      kept.push_back(std::move(t));
    }
    at.keywords = std::move(kept);
  }

  if (opts.map_interrogatives) {
    std::optional<ClassId> wh;
    std::optional<CharSpan> wh_span;
    if (opts.wh_override) {
      if (!opts.wh_override->empty()) wh = *opts.wh_override;
    } else {
      for (const WordRun& run : word_runs(text)) {
        const std::string folded = fold_case(run.text);
        if (is_interrogative_word(folded) || interrogatives_.contains(folded)) {
          wh = map_interrogative(folded, interrogatives_);
          wh_span = run.span;
          break;
        }
      }
    }
    // Classes the ontology does not know cannot match any document.
    if (wh && kb_->find_class(*wh) != nullptr) {
      at.wh_classes.push_back(*wh);
      if (wh_span) {
        std::erase_if(at.keywords,
                      [&](const Token& t) { return t.span == *wh_span; });
      }
    }
  }
  return at;
}

AnnotatedText annotate(std::string_view text, const KnowledgeBase& kb,
                       const AnnotationOptions& opts,
                       const StopWordSet& stopwords,
                       const InterrogativeMap& interrogatives) {
  return Annotator(kb, stopwords, interrogatives).annotate(text, opts);
}

}  // namespace ontovsm
