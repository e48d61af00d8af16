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

#include <set>

#include "ontovsm/annotate.h"
#include "test_kb.h"

namespace ontovsm {
namespace {

using testing::example_kb;

std::vector<std::string> stems(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.stem);
  return out;
}

TEST(Tokenize, StanfordQuery) {
  const auto tokens = tokenize_keywords(testing::kStanfordQuery, default_stopwords());
  EXPECT_EQ(stems(tokens), (std::vector<std::string>{"presid", "stanford", "univers"}));
  EXPECT_EQ(tokens[0].surface, "president");
  EXPECT_EQ(tokens[0].span.begin, 11U);
  EXPECT_EQ(tokens[0].span.end, 20U);
}

TEST(Tokenize, EmptyAndAllStopwords) {
  EXPECT_TRUE(tokenize_keywords("", default_stopwords()).empty());
  EXPECT_TRUE(tokenize_keywords("the of and", {"the", "of", "and"}).empty());
}

TEST(Tokenize, SplitsOnPunctuationAndFoldsCase) {
  const auto tokens = tokenize_keywords("Co-chaired, YEARS!", {});
  EXPECT_EQ(stems(tokens), (std::vector<std::string>{"co", "chair", "year"}));
}

TEST(Recognize, StanfordUniversityIsIdentified) {
  const KnowledgeBase kb = example_kb();
  const auto ents = recognize_entities("Stanford University President Don Kennedy", kb);
  ASSERT_EQ(ents.size(), 1U);
  EXPECT_EQ(ents[0].surface, "Stanford University");
  EXPECT_EQ(ents[0].name, "Stanford University");
  EXPECT_EQ(ents[0].class_id, "University");
  EXPECT_EQ(ents[0].entity_id, "University_T.52");
  EXPECT_EQ(ents[0].span.begin, 0U);
  EXPECT_EQ(ents[0].span.end, 19U);
}

TEST(Recognize, LongestMatchWins) {
  const KnowledgeBase kb = example_kb();
  const auto ents = recognize_entities("stanford  UNIVERSITY and Stanford", kb);
  ASSERT_EQ(ents.size(), 2U);
  EXPECT_EQ(ents[0].surface, "stanford  UNIVERSITY");
  EXPECT_EQ(ents[0].entity_id, "University_T.52");
  EXPECT_EQ(ents[1].surface, "Stanford");
  EXPECT_EQ(ents[1].entity_id, "University_T.52");
}

TEST(Recognize, MatchesRespectWordBoundaries) {
  const KnowledgeBase kb = example_kb();
  EXPECT_TRUE(recognize_entities("Stanfordville UNicef", kb).empty());
  EXPECT_TRUE(recognize_entities("nothing to see here", kb).empty());
}

TEST(Recognize, AmbiguousNameSharingAClass) {
  const KnowledgeBase kb = example_kb();
  const auto ents = recognize_entities("flights to Moscow", kb);
  ASSERT_EQ(ents.size(), 1U);
  EXPECT_EQ(ents[0].name, "Moscow");
  EXPECT_EQ(ents[0].class_id, "City");
  EXPECT_FALSE(ents[0].entity_id.has_value());
}

TEST(Recognize, AmbiguousNameAcrossClassesKeepsOnlyTheName) {
  std::istringstream in(
      "CLASS\tCity\t-\t-\nCLASS\tMan\t-\t-\n"
      "ENTITY\tCity_T.9\tCity\tWashington\nENTITY\tMan_T.9\tMan\tWashington\n");
  const KnowledgeBase kb = parse_kb(in, "w.kb");
  const auto ents = recognize_entities("Washington", kb);
  ASSERT_EQ(ents.size(), 1U);
  EXPECT_EQ(ents[0].name, "Washington");
  EXPECT_FALSE(ents[0].class_id.has_value());
  EXPECT_FALSE(ents[0].entity_id.has_value());
}

TEST(Recognize, AliasResolvesToTheSameEntity) {
  const KnowledgeBase kb = example_kb();
  const auto a = recognize_entities("news from Georgia", kb);
  const auto b = recognize_entities("news from Gruzia", kb);
  ASSERT_EQ(a.size(), 1U);
  ASSERT_EQ(b.size(), 1U);
  EXPECT_EQ(a[0].entity_id, "Country_T.81");
  EXPECT_EQ(b[0].entity_id, "Country_T.81");
  EXPECT_EQ(b[0].name, "Georgia");
}

TEST(Recognize, ClassLabelYieldsAClassOnlyAnnotation) {
  const KnowledgeBase kb = example_kb();
  const auto ents =
      recognize_entities("Countries have newly joined the United Nations", kb);
  ASSERT_EQ(ents.size(), 2U);
  EXPECT_FALSE(ents[0].name.has_value());
  EXPECT_EQ(ents[0].class_id, "Country");
  EXPECT_FALSE(ents[0].entity_id.has_value());
  EXPECT_EQ(ents[1].entity_id, "InternationalOrganization_T.17");
}

TEST(Recognize, SpansAreSortedAndDisjoint) {
  const KnowledgeBase kb = example_kb();
  const auto ents = recognize_entities(testing::kCaliforniaDocument, kb);
  for (std::size_t i = 1; i < ents.size(); ++i) {
    EXPECT_LE(ents[i - 1].span.end, ents[i].span.begin);
  }
  for (const auto& e : ents) {
    if (e.entity_id) {
      EXPECT_EQ(kb.entity(*e.entity_id).class_id, e.class_id);
      EXPECT_TRUE(e.name.has_value());
    }
  }
}

TEST(Interrogatives, DefaultMapping) {
  const InterrogativeMap& m = default_interrogative_map();
  EXPECT_EQ(map_interrogative("Who", m), "Person");
  EXPECT_EQ(map_interrogative("Where", m), "Location");
  EXPECT_EQ(map_interrogative("WHEN", m), "DayTime");
  EXPECT_EQ(map_interrogative("which", m), "Person");
  EXPECT_FALSE(map_interrogative("What", m).has_value());
  EXPECT_FALSE(map_interrogative("How", m).has_value());
  EXPECT_FALSE(map_interrogative("Zorp", m).has_value());
}

TEST(Annotate, CaliforniaDocumentGeneralized) {
  // Don Kennedy and California Compact are not in this KB; give them entries.
  std::istringstream in(std::string(testing::kExampleKb) +
                        "ENTITY\tOrganization_T.1\tOrganization\tCalifornia Compact\n"
                        "ENTITY\tPerson_T.1\tMan\tDon Kennedy\n");
  const KnowledgeBase full = parse_kb(in, "full.kb");
  AnnotationOptions opts;
  opts.treat_names_as_keywords = false;
  const AnnotatedText at = annotate(testing::kCaliforniaDocument, full, opts);
  EXPECT_EQ(stems(at.keywords), (std::vector<std::string>{"exist", "year", "group",
                                                          "co", "chair", "presid"}));
  EXPECT_EQ(at.entities.size(), 4U);

  opts.treat_names_as_keywords = true;
  const AnnotatedText multi = annotate(testing::kCaliforniaDocument, full, opts);
  const std::vector<std::string> multi_stems = stems(multi.keywords);
  const std::set<std::string> all(multi_stems.begin(), multi_stems.end());
  for (const char* s : {"california", "compact", "stanford", "univers", "don",
                        "kennedi", "exist", "year", "group", "co", "chair", "presid"}) {
    EXPECT_TRUE(all.contains(s)) << s;
  }
  EXPECT_EQ(all.size(), 12U);
  EXPECT_TRUE(multi.wh_classes.empty());
}

TEST(Annotate, EntityOnlyTextHasNoKeywordsInGeneralizedMode) {
  const KnowledgeBase kb = example_kb();
  AnnotationOptions opts;
  opts.treat_names_as_keywords = false;
  const AnnotatedText at = annotate("United Nations", kb, opts);
  EXPECT_TRUE(at.keywords.empty());
  EXPECT_EQ(at.entities.size(), 1U);
}

TEST(Annotate, LeadingInterrogativeIsMapped) {
  const KnowledgeBase kb = example_kb();
  AnnotationOptions opts;
  opts.treat_names_as_keywords = false;
  opts.map_interrogatives = true;
  const Annotator annotator(kb, default_stopwords(), default_interrogative_map());
  const AnnotatedText at = annotator.annotate(testing::kStanfordQuery, opts);
  EXPECT_EQ(at.wh_classes, (std::vector<ClassId>{"Person"}));
  EXPECT_EQ(stems(at.keywords), (std::vector<std::string>{"presid"}));

  opts.map_interrogatives = false;
  EXPECT_TRUE(annotator.annotate(testing::kStanfordQuery, opts).wh_classes.empty());
}

TEST(Annotate, OverrideReplacesTheMapping) {
  const KnowledgeBase kb = example_kb();
  AnnotationOptions opts;
  opts.map_interrogatives = true;
  opts.wh_override = "Man";
  const Annotator annotator(kb, default_stopwords(), default_interrogative_map());
  EXPECT_EQ(annotator.annotate(testing::kStanfordQuery, opts).wh_classes,
            (std::vector<ClassId>{"Man"}));
  opts.wh_override = "";
  EXPECT_TRUE(annotator.annotate(testing::kStanfordQuery, opts).wh_classes.empty());
}

TEST(Annotate, ClassesMissingFromTheOntologyAreDropped) {
  const KnowledgeBase kb = example_kb();
  AnnotationOptions opts;
  opts.map_interrogatives = true;
  const Annotator annotator(kb, default_stopwords(), {{"what", "Percent"}});
  EXPECT_TRUE(annotator.annotate("What is the limit?", opts).wh_classes.empty());
}

TEST(Annotate, IsDeterministic) {
  const KnowledgeBase kb = example_kb();
  AnnotationOptions opts;
  EXPECT_EQ(annotate(testing::kCaliforniaDocument, kb, opts),
            annotate(testing::kCaliforniaDocument, kb, opts));
}

}  // namespace
}  // namespace ontovsm
