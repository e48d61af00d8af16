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

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "ontovsm/errors.h"
#include "ontovsm/kb.h"

namespace ontovsm {
namespace {

KnowledgeBase parse(const std::string& text) {
  std::istringstream in(text);
  return parse_kb(in, "test.kb");
}

const char* kOntology =
    "# sample\n"
    "CLASS\tEntity\t-\tTOP\n"
    "CLASS\tObject\t\tTOP\n"
    "CLASS\tAgent\tObject\t-\n"
    "CLASS\tGroup\tAgent\t-\n"
    "CLASS\tOrganization\tGroup\t-\n"
    "CLASS\tEducationalOrganization\tOrganization\t-\n"
    "CLASS\tUniversity\tEducationalOrganization,Organization,Group,Agent\t-\n"
    "CLASS\tLocation\tObject\t-\n"
    "CLASS\tPoliticalRegion\tLocation\t-\n"
    "CLASS\tProvince\tPoliticalRegion\t-\n"
    "CLASS\tCountry\tPoliticalRegion\t-\tcountry|countries\n"
    "ENTITY\tUniversity_T.52\tUniversity\tStanford University\tStanford\n"
    "ENTITY\tCountry_T.1\tCountry\tGeorgia\tGruzia\n"
    "ENTITY\tProvince_T.4198\tProvince\tCalifornia\t\n";

TEST(KnowledgeBase, UniversityChain) {
  const KnowledgeBase kb = parse(kOntology);
  EXPECT_EQ(kb.super_classes("University"),
            (std::vector<ClassId>{"Agent", "EducationalOrganization", "Group",
                                  "Organization"}));
}

TEST(KnowledgeBase, SuperClassesExcludeTopLevelAndSelf) {
  const KnowledgeBase kb = parse(kOntology);
  EXPECT_EQ(kb.super_classes("Province"),
            (std::vector<ClassId>{"Location", "PoliticalRegion"}));
  EXPECT_TRUE(kb.super_classes("Entity").empty());
  EXPECT_TRUE(kb.super_classes("Location").empty());
}

TEST(KnowledgeBase, FourNodeChain) {
  const KnowledgeBase kb = parse(
      "CLASS\tTop\t-\tTOP\nCLASS\tC\tTop\t-\nCLASS\tB\tC\t-\nCLASS\tA\tB\t-\n");
  EXPECT_EQ(kb.super_classes("A"), (std::vector<ClassId>{"B", "C"}));
}

TEST(KnowledgeBase, AliasSets) {
  const KnowledgeBase kb = parse(kOntology);
  EXPECT_EQ(kb.alias_set("Country_T.1"),
            (std::vector<std::string>{"Georgia", "Gruzia"}));
  EXPECT_EQ(kb.alias_set("University_T.52"),
            (std::vector<std::string>{"Stanford University", "Stanford"}));
  EXPECT_EQ(kb.alias_set("Province_T.4198"), (std::vector<std::string>{"California"}));
  EXPECT_THROW(kb.alias_set("Nope"), UnknownIdError);
}

TEST(KnowledgeBase, SubclassRelation) {
  const KnowledgeBase kb = parse(kOntology);
  EXPECT_TRUE(kb.is_subclass_of("Province", "Location"));
  EXPECT_TRUE(kb.is_subclass_of("Province", "Province"));
  EXPECT_FALSE(kb.is_subclass_of("Location", "Province"));
  EXPECT_THROW(kb.is_subclass_of("Province", "Nope"), UnknownIdError);
}

TEST(KnowledgeBase, NameIndexCoversEveryNormalizedName) {
  const KnowledgeBase kb = parse(kOntology);
  const auto& idx = kb.name_index();
  EXPECT_EQ(idx.size(), 5U);
  EXPECT_EQ(idx.at("stanford"), (std::vector<EntityId>{"University_T.52"}));
  EXPECT_EQ(idx.at("stanford university"), (std::vector<EntityId>{"University_T.52"}));
  EXPECT_EQ(idx.at("gruzia"), (std::vector<EntityId>{"Country_T.1"}));
  EXPECT_EQ(kb.class_label_index().at("countries"), "Country");
}

TEST(KnowledgeBase, CanonicalNameIsNotStoredAsAlias) {
  const KnowledgeBase kb =
      parse("CLASS\tC\t-\t-\nENTITY\tE\tC\tMoscow\tMoscow|Moskva|Moskva\n");
  EXPECT_EQ(kb.entity("E").aliases, (std::vector<std::string>{"Moskva"}));
}

TEST(KnowledgeBase, EmptyFile) {
  const KnowledgeBase kb = parse("# nothing\n\n");
  EXPECT_TRUE(kb.empty());
}

TEST(KnowledgeBase, TwoNodeCycle) {
  EXPECT_THROW(parse("CLASS\tA\tB\t-\nCLASS\tB\tA\t-\n"), CycleError);
}

TEST(KnowledgeBase, SelfLoopIsACycle) {
  EXPECT_THROW(parse("CLASS\tA\tA\t-\n"), CycleError);
}

TEST(KnowledgeBase, DanglingReferences) {
  EXPECT_THROW(parse("CLASS\tA\tB\t-\n"), UnknownIdError);
  EXPECT_THROW(parse("CLASS\tA\t-\t-\nENTITY\tE\tB\tName\n"), UnknownIdError);
}

TEST(KnowledgeBase, DuplicateIdsReportTheLine) {
  try {
    parse("CLASS\tA\t-\t-\nCLASS\tA\t-\t-\n");
    FAIL() << "expected DuplicateIdError";
  } catch (const DuplicateIdError& e) {
    EXPECT_NE(std::string(e.what()).find("test.kb:2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse("CLASS\tA\t-\t-\nENTITY\tE\tA\tx\nENTITY\tE\tA\ty\n"),
               DuplicateIdError);
}

TEST(KnowledgeBase, ParseErrorsCarryLineNumbers) {
  try {
    parse("CLASS\tA\t-\t-\n\nCLASS\tB\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3U);
  }
  EXPECT_THROW(parse("CLASS\tA\t-\tMAYBE\n"), ParseError);
  EXPECT_THROW(parse("THING\tA\n"), ParseError);
  EXPECT_THROW(parse("CLASS\tA\t-\t-\nENTITY\tE\tA\t\n"), ParseError);
}

TEST(KnowledgeBase, TopLevelClassWithParentsIsRejected) {
  EXPECT_THROW(parse("CLASS\tA\t-\t-\nCLASS\tB\tA\tTOP\n"), ValidationError);
}

TEST(KnowledgeBase, SharedClassLabelIsRejected) {
  EXPECT_THROW(parse("CLASS\tA\t-\t-\tx\nCLASS\tB\t-\t-\tX\n"), ValidationError);
}

TEST(KnowledgeBase, LoadMissingFile) {
  EXPECT_THROW(load_kb("/nonexistent/kb.tsv"), Error);
}

// Random DAG over n classes: edges only from higher to lower index.
struct RandomDag {
  std::vector<ClassDef> classes;
};

RandomDag random_dag(std::mt19937_64& rng, int n, double p) {
  RandomDag dag;
  for (int i = 0; i < n; ++i) {
    ClassDef c;
    c.id = "C" + std::to_string(i);
    c.top_level = i < 2 && rng() % 2 == 0;
    if (!c.top_level) {
      for (int j = 0; j < i; ++j) {
        if (static_cast<double>(rng() % 1000) / 1000.0 < p) {
          c.parents.push_back("C" + std::to_string(j));
        }
      }
    }
    dag.classes.push_back(c);
  }
  return dag;
}

// Reachability by repeated relaxation, independent of the KB's closure code.
std::set<std::pair<int, int>> reachable(const RandomDag& dag) {
  const int n = static_cast<int>(dag.classes.size());
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (const ClassId& p : dag.classes[i].parents) r[i][std::stoi(p.substr(1))] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  std::set<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (r[i][j]) out.emplace(i, j);
  return out;
}

TEST(KnowledgeBaseProperty, ClosureMatchesBruteForceAndIsTransitive) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const RandomDag dag = random_dag(rng, 9, 0.3);
    const KnowledgeBase kb = KnowledgeBase::build(dag.classes, {});
    const auto reach = reachable(dag);
    for (int i = 0; i < 9; ++i) {
      const ClassId ci = "C" + std::to_string(i);
      std::vector<ClassId> expected;
      for (int j = 0; j < 9; ++j) {
        if (reach.contains({i, j}) && !dag.classes[j].top_level) {
          expected.push_back("C" + std::to_string(j));
        }
      }
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(kb.super_classes(ci), expected);
      for (const ClassId& s : kb.super_classes(ci)) {
        EXPECT_NE(s, ci);
        EXPECT_FALSE(kb.class_def(s).top_level);
      }
      for (int j = 0; j < 9; ++j) {
        for (int k = 0; k < 9; ++k) {
          const ClassId cj = "C" + std::to_string(j);
          const ClassId ck = "C" + std::to_string(k);
          if (kb.is_subclass_of(ci, cj) && kb.is_subclass_of(cj, ck)) {
            EXPECT_TRUE(kb.is_subclass_of(ci, ck));
          }
        }
      }
    }
  }
}

TEST(KnowledgeBaseProperty, AddingAnEdgeNeverShrinksAClosure) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    RandomDag dag = random_dag(rng, 8, 0.25);
    const KnowledgeBase before = KnowledgeBase::build(dag.classes, {});
    const int child = 2 + static_cast<int>(rng() % 6);
    const int parent = static_cast<int>(rng() % child);
    auto& parents = dag.classes[child].parents;
    const ClassId p = "C" + std::to_string(parent);
    if (std::find(parents.begin(), parents.end(), p) == parents.end()) {
      parents.push_back(p);
    }
    const KnowledgeBase after = KnowledgeBase::build(dag.classes, {});
    for (const auto& [id, def] : before.classes()) {
      for (const ClassId& s : before.super_classes(id)) {
        const auto& grown = after.super_classes(id);
        EXPECT_TRUE(std::find(grown.begin(), grown.end(), s) != grown.end());
      }
    }
  }
}

TEST(KnowledgeBaseProperty, AliasSetStartsWithCanonicalName) {
  const KnowledgeBase kb = parse(kOntology);
  for (const auto& [id, e] : kb.entities()) {
    const auto set = kb.alias_set(id);
    ASSERT_FALSE(set.empty());
    EXPECT_EQ(set.front(), e.canonical_name);
  }
}

}  // namespace
}  // namespace ontovsm
