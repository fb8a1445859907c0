// Copyright 2026 The itnforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "itn/grammar.h"

#include <fstream>
#include <string>

#include <gtest/gtest.h>

namespace itn {
namespace {

std::string WriteTempLexicon(const std::string& name,
                             const std::string& body) {
  std::string path = testing::TempDir() + name;
  std::ofstream out(path);
  out << body;
  return path;
}

TEST(DefaultGrammarTest, MatchesShippedLexiconFile) {
  Grammar from_file = CompileGrammar({ITN_LEX_FILE});
  EXPECT_TRUE(from_file == DefaultGrammar());
}

TEST(DefaultGrammarTest, MatchesEmbeddedText) {
  Grammar g = CompileGrammarText(DefaultGrammarText(), "embedded.lex");
  EXPECT_TRUE(g == DefaultGrammar());
}

TEST(DefaultGrammarTest, CoreLexiconsPresent) {
  const Grammar& g = DefaultGrammar();
  EXPECT_EQ(g.schema_version, 1);
  EXPECT_EQ(g.locale, "en-US");
  EXPECT_EQ(g.months.at("october"), 10);
  EXPECT_EQ(g.month_names.at(10), "October");
  EXPECT_EQ(g.currency.at("dollars"), "$");
  EXPECT_TRUE(g.currency_minor.count("cents"));
  EXPECT_EQ(g.units.at("kilometers"), "km");
  EXPECT_EQ(g.time_words.at("noon").hour, 12);
  EXPECT_TRUE(g.time_zones.count("gmt"));
  EXPECT_EQ(g.meridiem.at("a m"), "am");
  EXPECT_TRUE(g.phone_enabled());
  EXPECT_TRUE(g.abbreviations.count("dr."));
}

TEST(DefaultGrammarTest, DerivesWrittenToSpokenUnitMaps) {
  const Grammar& g = DefaultGrammar();
  EXPECT_EQ(g.unit_singular.at("km"), "kilometer");
  EXPECT_EQ(g.unit_plural.at("km"), "kilometers");
  EXPECT_EQ(g.unit_singular.at("foot"), "foot");
  EXPECT_EQ(g.unit_plural.at("lbs"), "pounds");
  EXPECT_EQ(g.unit_singular.at("lb"), "pound");
}

TEST(CompileGrammarTextTest, MinimalGrammarCompiles) {
  Grammar g = CompileGrammarText("schema_version = 1\nlocale = test\n",
                                 "mini.lex");
  EXPECT_EQ(g.schema_version, 1);
  EXPECT_EQ(g.locale, "test");
  EXPECT_TRUE(g.months.empty());
  EXPECT_FALSE(g.phone_enabled());
}

TEST(CompileGrammarTextTest, EmptyPhoneSectionDisablesPhones) {
  Grammar g = CompileGrammarText("schema_version = 1\n[phone]\n", "p.lex");
  EXPECT_FALSE(g.phone_enabled());
}

TEST(CompileGrammarTextTest, MissingSchemaVersionFails) {
  try {
    CompileGrammarText("locale = test\n", "bad.lex");
    FAIL() << "expected GrammarError";
  } catch (const GrammarError& e) {
    EXPECT_EQ(e.kind(), GrammarError::Kind::kSyntax);
    EXPECT_EQ(e.file(), "bad.lex");
  }
}

TEST(CompileGrammarTextTest, WrongSchemaVersionFails) {
  EXPECT_THROW(CompileGrammarText("schema_version = 2\n", "bad.lex"),
               GrammarError);
}

TEST(CompileGrammarTextTest, DuplicateKeyNamesFileAndLine) {
  const char* body =
      "schema_version = 1\n"
      "[months]\n"
      "january = 1\n"
      "january = 2\n";
  try {
    CompileGrammarText(body, "dup.lex");
    FAIL() << "expected GrammarError";
  } catch (const GrammarError& e) {
    EXPECT_EQ(e.kind(), GrammarError::Kind::kDuplicateKey);
    EXPECT_EQ(e.file(), "dup.lex");
    EXPECT_EQ(e.line(), 4);
    EXPECT_NE(std::string(e.what()).find("dup.lex:4"), std::string::npos);
  }
}

TEST(CompileGrammarTextTest, SyntaxErrorsNameTheLine) {
  try {
    CompileGrammarText("schema_version = 1\n[months]\nnot a kv row\n",
                       "syn.lex");
    FAIL() << "expected GrammarError";
  } catch (const GrammarError& e) {
    EXPECT_EQ(e.kind(), GrammarError::Kind::kSyntax);
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(CompileGrammarTextTest, RejectsUnknownSections) {
  EXPECT_THROW(CompileGrammarText("schema_version = 1\n[made_up]\n", "u.lex"),
               GrammarError);
  EXPECT_THROW(CompileGrammarText("schema_version = 1\n[months\n", "u.lex"),
               GrammarError);
}

TEST(CompileGrammarTextTest, ListSectionsRejectKeyValueRows) {
  EXPECT_THROW(
      CompileGrammarText("schema_version = 1\n[weekdays]\nmonday = 1\n",
                         "l.lex"),
      GrammarError);
}

TEST(CompileGrammarTextTest, RejectsMalformedTimeValues) {
  EXPECT_THROW(
      CompileGrammarText("schema_version = 1\n[time_words]\nnoon = later\n",
                         "t.lex"),
      GrammarError);
}

TEST(CompileGrammarTest, MissingFileIsAnIoError) {
  try {
    CompileGrammar({"/nonexistent/nowhere.lex"});
    FAIL() << "expected GrammarError";
  } catch (const GrammarError& e) {
    EXPECT_EQ(e.kind(), GrammarError::Kind::kIo);
  }
}

TEST(CompileGrammarTest, LaterFilesExtendEarlierOnes) {
  std::string base = WriteTempLexicon("grammar_base.lex",
                                      "schema_version = 1\n"
                                      "locale = test\n"
                                      "[units]\n"
                                      "miles = miles\n");
  std::string extra = WriteTempLexicon("grammar_extra.lex",
                                       "schema_version = 1\n"
                                       "[units]\n"
                                       "furlongs = fur\n");
  Grammar g = CompileGrammar({base, extra});
  EXPECT_EQ(g.units.at("miles"), "miles");
  EXPECT_EQ(g.units.at("furlongs"), "fur");
}

TEST(CompileGrammarTest, CrossFileRedefinitionIsADuplicate) {
  std::string base = WriteTempLexicon("grammar_redef_a.lex",
                                      "schema_version = 1\n"
                                      "[units]\n"
                                      "miles = miles\n");
  std::string extra = WriteTempLexicon("grammar_redef_b.lex",
                                       "schema_version = 1\n"
                                       "[units]\n"
                                       "miles = mi\n");
  try {
    CompileGrammar({base, extra});
    FAIL() << "expected GrammarError";
  } catch (const GrammarError& e) {
    EXPECT_EQ(e.kind(), GrammarError::Kind::kDuplicateKey);
    EXPECT_EQ(e.file(), extra);
  }
}

TEST(PhonePatternTest, RendersAndMatchesDigitStrings) {
  Grammar g = CompileGrammarText(
      "schema_version = 1\n[phone]\nXXX-XXX-XXXX\n1-XXX-XXX-XXXX\n", "p.lex");
  ASSERT_EQ(g.phone_patterns.size(), 2u);
  const PhonePattern& plain = g.phone_patterns[0];
  EXPECT_EQ(plain.digit_count, 10u);
  EXPECT_TRUE(plain.Matches("8002557828"));
  EXPECT_FALSE(plain.Matches("800255782"));
  EXPECT_EQ(plain.Render("8002557828"), "800-255-7828");

  const PhonePattern& tollfree = g.phone_patterns[1];
  EXPECT_EQ(tollfree.digit_count, 11u);
  EXPECT_TRUE(tollfree.Matches("18002557828"));
  // The literal "1" must match itself.
  EXPECT_FALSE(tollfree.Matches("28002557828"));
  EXPECT_EQ(tollfree.Render("18002557828"), "1-800-255-7828");
  EXPECT_EQ(tollfree.Render("28002557828"), "");
}

TEST(AbbreviationTest, ContextRulesParseInOrder) {
  const Grammar& g = DefaultGrammar();
  const AbbreviationEntry& dr = g.abbreviations.at("dr.");
  ASSERT_EQ(dr.rules.size(), 5u);
  EXPECT_EQ(dr.rules[0].condition, AbbreviationEntry::Condition::kNextCapital);
  EXPECT_EQ(dr.rules[0].expansion, "doctor");
  EXPECT_EQ(dr.rules[1].condition, AbbreviationEntry::Condition::kPrevCapital);
  EXPECT_EQ(dr.rules[1].expansion, "drive");
  EXPECT_EQ(dr.rules[4].condition, AbbreviationEntry::Condition::kDefault);
}

TEST(GrammarEqualityTest, DetectsDifferences) {
  Grammar a = CompileGrammarText("schema_version = 1\nlocale = x\n", "a.lex");
  Grammar b = CompileGrammarText("schema_version = 1\nlocale = y\n", "b.lex");
  EXPECT_FALSE(a == b);
  Grammar c = CompileGrammarText("schema_version = 1\nlocale = x\n", "c.lex");
  EXPECT_TRUE(a == c);
}

}  // namespace
}  // namespace itn
