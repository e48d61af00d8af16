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

#include "ontovsm/expand.h"

#include <set>
#include <utility>
#include <vector>

#include "ontovsm/errors.h"
#include "ontovsm/text.h"

namespace ontovsm {
namespace {

void check_consistent(const EntityAnnotation& a, const KnowledgeBase& kb) {
  if (a.class_id) kb.class_def(*a.class_id);
  if (a.entity_id) {
    const EntityDef& e = kb.entity(*a.entity_id);
    if (a.class_id && *a.class_id != e.class_id) {
      throw ValidationError("annotation of '" + e.id + "' carries class '" +
                            *a.class_id + "' but the entity is a '" +
                            e.class_id + "'");
    }
  }
  if (!a.name && !a.class_id && !a.entity_id) {
    throw ValidationError("annotation '" + a.surface +
                          "' has no specified slot");
  }
}

void add_keywords(const AnnotatedText& at, DocRepresentation& rep,
                  ExpansionModel model) {
  for (const Token& t : at.keywords) {
    const GeneralizedTerm term = GeneralizedTerm::keyword(t.stem);
    rep.bag(Space::kKeyword).add(term);
    if (model == ExpansionModel::kGeneralized) {
      rep.bag(Space::kGeneralized).add(term);
    }
  }
}

// Name variants deduplicated under name normalization, in a stable order.
std::vector<std::string> name_variants(const EntityAnnotation& a,
                                       const KnowledgeBase& kb) {
  std::vector<std::string> raw;
  if (a.name) raw.push_back(*a.name);
  if (a.entity_id) {
    for (std::string& n : kb.alias_set(*a.entity_id)) raw.push_back(std::move(n));
  }
  std::set<std::string> seen;
  std::vector<std::string> out;
  for (std::string& n : raw) {
    std::string key = normalize_name(n);
    if (key.empty() || !seen.insert(key).second) continue;
    out.push_back(std::move(key));
  }
  return out;
}

std::vector<ClassId> class_variants(const EntityAnnotation& a,
                                    const KnowledgeBase& kb) {
  std::vector<ClassId> out;
  if (!a.class_id) return out;
  out.push_back(*a.class_id);
  for (const ClassId& s : kb.super_classes(*a.class_id)) {
    if (s != *a.class_id) out.push_back(s);
  }
  return out;
}

}  // namespace

DocRepresentation expand_document(const AnnotatedText& at,
                                  const KnowledgeBase& kb,
                                  ExpansionModel model) {
  DocRepresentation rep;
  add_keywords(at, rep, model);
  const bool multi = model == ExpansionModel::kMultiVector;
  auto put = [&](Space space, const GeneralizedTerm& t) {
    rep.bag(multi ? space : Space::kGeneralized).add(t);
  };

  for (const EntityAnnotation& a : at.entities) {
    check_consistent(a, kb);
    const std::vector<std::string> names = name_variants(a, kb);
    const std::vector<ClassId> classes = class_variants(a, kb);
    if (a.entity_id) {
      put(Space::kIdentifier,
          GeneralizedTerm::triple(std::nullopt, std::nullopt, *a.entity_id));
    }
    for (const std::string& n : names) {
      put(Space::kName, GeneralizedTerm::triple(n, std::nullopt, std::nullopt));
    }
    for (const ClassId& c : classes) {
      put(Space::kClass, GeneralizedTerm::triple(std::nullopt, c, std::nullopt));
    }
    for (const std::string& n : names) {
      for (const ClassId& c : classes) {
        put(Space::kNameClass, GeneralizedTerm::triple(n, c, std::nullopt));
      }
    }
  }
  return rep;
}

DocRepresentation expand_query(const AnnotatedText& at, const KnowledgeBase& kb,
                               ExpansionModel model, bool wh) {
  DocRepresentation rep;
  add_keywords(at, rep, model);
  const bool multi = model == ExpansionModel::kMultiVector;
  auto put = [&](Space space, const GeneralizedTerm& t) {
    rep.bag(multi ? space : Space::kGeneralized).add(t);
  };

  for (const EntityAnnotation& a : at.entities) {
    check_consistent(a, kb);
    if (a.entity_id) {
      put(Space::kIdentifier,
          GeneralizedTerm::triple(std::nullopt, std::nullopt, *a.entity_id));
    } else if (a.name && a.class_id) {
      put(Space::kNameClass,
          GeneralizedTerm::triple(*a.name, *a.class_id, std::nullopt));
    } else if (a.class_id) {
      put(Space::kClass,
          GeneralizedTerm::triple(std::nullopt, *a.class_id, std::nullopt));
    } else {
      put(Space::kName, GeneralizedTerm::triple(*a.name, std::nullopt, std::nullopt));
    }
  }
  if (wh) {
    for (const ClassId& c : at.wh_classes) {
      kb.class_def(c);
      put(Space::kClass, GeneralizedTerm::triple(std::nullopt, c, std::nullopt));
    }
  }
  return rep;
}

DocRepresentation represent_document(std::string doc_id, std::string_view text,
                                     const Annotator& annotator) {
  AnnotationOptions multi_opts;
  multi_opts.treat_names_as_keywords = true;
  DocRepresentation rep =
      expand_document(annotator.annotate(text, multi_opts), annotator.kb(),
                      ExpansionModel::kMultiVector);

  AnnotationOptions gen_opts;
  gen_opts.treat_names_as_keywords = false;
  DocRepresentation gen =
      expand_document(annotator.annotate(text, gen_opts), annotator.kb(),
                      ExpansionModel::kGeneralized);
  rep.bag(Space::kGeneralized) = std::move(gen.bag(Space::kGeneralized));
  rep.doc_id = std::move(doc_id);
  return rep;
}

}  // namespace ontovsm
