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

#include "ontovsm/kb.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <utility>

#include "ontovsm/errors.h"
#include "ontovsm/text.h"

namespace ontovsm {
namespace {

void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Depth-first closure computation with three-colour cycle detection.
class ClosureBuilder {
 public:
  explicit ClosureBuilder(const std::map<ClassId, ClassDef>& classes)
      : classes_(classes) {}

  std::map<ClassId, std::vector<ClassId>> run() {
    for (const auto& [id, def] : classes_) visit(id);
    std::map<ClassId, std::vector<ClassId>> out;
    for (auto& [id, all] : ancestors_) {
      std::vector<ClassId> filtered;
      for (const ClassId& a : all) {
        if (!classes_.at(a).top_level) filtered.push_back(a);
      }
      out.emplace(id, std::move(filtered));
    }
    return out;
  }

 private:
  enum class Mark { kInProgress, kDone };

  const std::set<ClassId>& visit(const ClassId& id) {
    if (auto it = marks_.find(id); it != marks_.end()) {
      if (it->second == Mark::kInProgress) {
        throw CycleError("class hierarchy contains a cycle through '" + id +
                         "'");
      }
      return ancestors_.at(id);
    }
    marks_[id] = Mark::kInProgress;
    std::set<ClassId> acc;
    for (const ClassId& parent : classes_.at(id).parents) {
      acc.insert(parent);
      const auto& up = visit(parent);
      acc.insert(up.begin(), up.end());
    }
    marks_[id] = Mark::kDone;
    return ancestors_[id] = std::move(acc);
  }

  const std::map<ClassId, ClassDef>& classes_;
  std::map<ClassId, Mark> marks_;
  std::map<ClassId, std::set<ClassId>> ancestors_;
};

}  // namespace

KnowledgeBase KnowledgeBase::build(std::vector<ClassDef> classes,
                                   std::vector<EntityDef> entities) {
  KnowledgeBase kb;
  for (ClassDef& c : classes) {
    if (c.id.empty()) throw ValidationError("empty class id");
    sort_unique(c.parents);
    sort_unique(c.labels);
    if (c.top_level && !c.parents.empty()) {
      throw ValidationError("top-level class '" + c.id + "' has parents");
    }
    const ClassId id = c.id;
    if (!kb.classes_.emplace(id, std::move(c)).second) {
      throw DuplicateIdError("duplicate class id '" + id + "'");
    }
  }
  for (const auto& [id, c] : kb.classes_) {
    for (const ClassId& p : c.parents) {
      if (!kb.classes_.contains(p)) {
        throw UnknownIdError("class '" + id + "' has undeclared parent '" +
                             p + "'");
      }
    }
    for (const std::string& label : c.labels) {
      const std::string key = normalize_name(label);
      if (key.empty()) {
        throw ValidationError("class '" + id + "' has an empty label");
      }
      auto [it, inserted] = kb.class_label_index_.emplace(key, id);
      if (!inserted && it->second != id) {
        throw ValidationError("label '" + label + "' is shared by classes '" +
                              it->second + "' and '" + id + "'");
      }
    }
  }
  kb.closures_ = ClosureBuilder(kb.classes_).run();

  for (EntityDef& e : entities) {
    if (e.id.empty()) throw ValidationError("empty entity id");
    if (trim(e.canonical_name).empty()) {
      throw ValidationError("entity '" + e.id + "' has an empty name");
    }
    if (!kb.classes_.contains(e.class_id)) {
      throw UnknownIdError("entity '" + e.id + "' has undeclared class '" +
                           e.class_id + "'");
    }
    std::erase_if(e.aliases, [&](const std::string& a) {
      return a == e.canonical_name;
    });
    sort_unique(e.aliases);
    for (const std::string& a : e.aliases) {
      if (trim(a).empty()) {
        throw ValidationError("entity '" + e.id + "' has an empty alias");
      }
    }
    const EntityId id = e.id;
    if (!kb.entities_.emplace(id, std::move(e)).second) {
      throw DuplicateIdError("duplicate entity id '" + id + "'");
    }
  }
  for (const auto& [id, e] : kb.entities_) {
    kb.name_index_[normalize_name(e.canonical_name)].push_back(id);
    for (const std::string& a : e.aliases) {
      kb.name_index_[normalize_name(a)].push_back(id);
    }
  }
  for (auto& [name, ids] : kb.name_index_) sort_unique(ids);
  return kb;
}

const ClassDef* KnowledgeBase::find_class(std::string_view id) const {
  auto it = classes_.find(std::string(id));
  return it == classes_.end() ? nullptr : &it->second;
}

const EntityDef* KnowledgeBase::find_entity(std::string_view id) const {
  auto it = entities_.find(std::string(id));
  return it == entities_.end() ? nullptr : &it->second;
}

const ClassDef& KnowledgeBase::class_def(std::string_view id) const {
  if (const ClassDef* c = find_class(id)) return *c;
  throw UnknownIdError("unknown class id '" + std::string(id) + "'");
}

const EntityDef& KnowledgeBase::entity(std::string_view id) const {
  if (const EntityDef* e = find_entity(id)) return *e;
  throw UnknownIdError("unknown entity id '" + std::string(id) + "'");
}

const std::vector<ClassId>& KnowledgeBase::super_classes(
    std::string_view c) const {
  auto it = closures_.find(std::string(c));
  if (it == closures_.end()) {
    throw UnknownIdError("unknown class id '" + std::string(c) + "'");
  }
  return it->second;
}

std::vector<std::string> KnowledgeBase::alias_set(std::string_view e) const {
  const EntityDef& def = entity(e);
  std::vector<std::string> out;
  out.reserve(def.aliases.size() + 1);
  out.push_back(def.canonical_name);
  out.insert(out.end(), def.aliases.begin(), def.aliases.end());
  return out;
}

bool KnowledgeBase::is_subclass_of(std::string_view c1,
                                   std::string_view c2) const {
  const auto& supers = super_classes(c1);
  class_def(c2);
  if (c1 == c2) return true;
  return std::binary_search(supers.begin(), supers.end(), c2);
}

KnowledgeBase parse_kb(std::istream& in, const std::string& source_name) {
  std::vector<ClassDef> classes;
  std::vector<EntityDef> entities;
  std::map<std::string, std::size_t> class_lines;
  std::map<std::string, std::size_t> entity_lines;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    const std::vector<std::string> f = split(line, '\t');
    if (f[0] == "CLASS") {
      if (f.size() != 4 && f.size() != 5) {
        throw ParseError(source_name, line_no,
                         "CLASS line needs 4 or 5 tab-separated fields");
      }
      ClassDef c;
      c.id = std::string(trim(f[1]));
      if (c.id.empty()) throw ParseError(source_name, line_no, "empty class id");
      const std::string_view parents = trim(f[2]);
      if (!parents.empty() && parents != "-") {
        for (const std::string& p : split(parents, ',')) {
          const std::string_view pid = trim(p);
          if (pid.empty()) {
            throw ParseError(source_name, line_no, "empty parent id");
          }
          c.parents.emplace_back(pid);
        }
      }
      const std::string_view flag = trim(f[3]);
      if (flag == "TOP") {
        c.top_level = true;
      } else if (flag != "-") {
        throw ParseError(source_name, line_no,
                         "top-level flag must be TOP or -");
      }
      if (f.size() == 5 && !trim(f[4]).empty()) {
        for (const std::string& l : split(f[4], '|')) {
          if (trim(l).empty()) {
            throw ParseError(source_name, line_no, "empty class label");
          }
          c.labels.push_back(l);
        }
      }
      auto [it, fresh] = class_lines.emplace(c.id, line_no);
      if (!fresh) {
        throw DuplicateIdError(source_name + ":" + std::to_string(line_no) +
                               ": duplicate class id '" + c.id +
                               "' (first declared on line " +
                               std::to_string(it->second) + ")");
      }
      classes.push_back(std::move(c));
    } else if (f[0] == "ENTITY") {
      if (f.size() != 4 && f.size() != 5) {
        throw ParseError(source_name, line_no,
                         "ENTITY line needs 4 or 5 tab-separated fields");
      }
      EntityDef e;
      e.id = std::string(trim(f[1]));
      e.class_id = std::string(trim(f[2]));
      e.canonical_name = std::string(trim(f[3]));
      if (e.id.empty() || e.class_id.empty() || e.canonical_name.empty()) {
        throw ParseError(source_name, line_no,
                         "ENTITY id, class and name must be non-empty");
      }
      if (f.size() == 5 && !trim(f[4]).empty()) {
        for (const std::string& a : split(f[4], '|')) {
          const std::string_view alias = trim(a);
          if (alias.empty()) {
            throw ParseError(source_name, line_no, "empty alias");
          }
          e.aliases.emplace_back(alias);
        }
      }
      auto [it, fresh] = entity_lines.emplace(e.id, line_no);
      if (!fresh) {
        throw DuplicateIdError(source_name + ":" + std::to_string(line_no) +
                               ": duplicate entity id '" + e.id +
                               "' (first declared on line " +
                               std::to_string(it->second) + ")");
      }
      entities.push_back(std::move(e));
    } else {
      throw ParseError(source_name, line_no,
                       "unknown record type '" + f[0] + "'");
    }
  }
  return KnowledgeBase::build(std::move(classes), std::move(entities));
}

KnowledgeBase load_kb(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open knowledge base '" + path.string() + "'");
  return parse_kb(in, path.string());
}

}  // namespace ontovsm
