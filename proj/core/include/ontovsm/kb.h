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

#ifndef ONTOVSM_KB_H_
#define ONTOVSM_KB_H_

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ontovsm {

using ClassId = std::string;
using EntityId = std::string;

struct ClassDef {
  ClassId id;
  std::vector<ClassId> parents;  // sorted, unique
  bool top_level = false;
  // Surface forms that refer to the class itself ("countries" for Country).
  // Matched by the recognizer as class-only mentions.
  std::vector<std::string> labels;
};

struct EntityDef {
  EntityId id;
  ClassId class_id;  // most specific class; superclasses are derived
  std::string canonical_name;
  std::vector<std::string> aliases;  // sorted, unique, never the canonical
};

// Ontology (class hierarchy) plus knowledge base (entity instances). Built
// once and immutable afterwards, so it may be shared freely across threads.
class KnowledgeBase {
 public:
  // The empty knowledge base.
  KnowledgeBase() = default;

  // Validates and indexes the given definitions. Throws DuplicateIdError,
  // UnknownIdError, CycleError or ValidationError.
  static KnowledgeBase build(std::vector<ClassDef> classes,
                             std::vector<EntityDef> entities);

  const std::map<ClassId, ClassDef>& classes() const { return classes_; }
  const std::map<EntityId, EntityDef>& entities() const { return entities_; }
  bool empty() const { return classes_.empty() && entities_.empty(); }

  // nullptr when undeclared.
  const ClassDef* find_class(std::string_view id) const;
  const EntityDef* find_entity(std::string_view id) const;

  // Throw UnknownIdError when undeclared.
  const ClassDef& class_def(std::string_view id) const;
  const EntityDef& entity(std::string_view id) const;

  // Transitive closure of the parent relation, minus top-level classes and
  // minus `c` itself. Sorted.
  const std::vector<ClassId>& super_classes(std::string_view c) const;

  // {canonical_name} ∪ aliases; the canonical name comes first.
  std::vector<std::string> alias_set(std::string_view e) const;

  // Reflexive: true iff c2 == c1 or c2 is in super_classes(c1).
  bool is_subclass_of(std::string_view c1, std::string_view c2) const;

  // normalize_name(surface) -> entities carrying that canonical name or
  // alias. Entity ids in each set are sorted.
  const std::map<std::string, std::vector<EntityId>>& name_index() const {
    return name_index_;
  }
  // normalize_name(label) -> class.
  const std::map<std::string, ClassId>& class_label_index() const {
    return class_label_index_;
  }

 private:
  std::map<ClassId, ClassDef> classes_;
  std::map<EntityId, EntityDef> entities_;
  std::map<ClassId, std::vector<ClassId>> closures_;
  std::map<std::string, std::vector<EntityId>> name_index_;
  std::map<std::string, ClassId> class_label_index_;
};

// Reads the line-oriented KB format:
//   CLASS <TAB> id <TAB> parent,parent,... <TAB> TOP|- [<TAB> label|label...]
//   ENTITY <TAB> id <TAB> class <TAB> canonical name <TAB> alias|alias|...
// '#' starts a comment line; blank lines are ignored. An empty or "-" parent
// field means no parents. Throws ParseError (with line number) on malformed
// lines and the KnowledgeBase::build errors on semantic problems.
KnowledgeBase parse_kb(std::istream& in, const std::string& source_name);
KnowledgeBase load_kb(const std::filesystem::path& path);

}  // namespace ontovsm

#endif  // ONTOVSM_KB_H_
