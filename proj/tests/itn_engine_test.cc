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
//
// End-to-end checks of spoken -> written inverse normalization against the
// default grammar.

#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "itn/grammar.h"
#include "itn/renderer.h"
#include "itn/tagger.h"
#include "itn/token.h"

namespace itn {
namespace {

std::string Norm(const std::string& spoken) {
  return Itn(DefaultGrammar(), spoken);
}

TEST(ItnEngineTest, EveryCardinalReadingOfTheSameValueConverges) {
  const char* readings[] = {
      "two thousand one hundred five",
      "two thousand one hundred and five",
      "twenty one oh five",
      "two one zero five",
      "two one oh five",
  };
  for (const char* spoken : readings) {
    EXPECT_EQ(Norm(spoken), "2105") << spoken;
  }
}

TEST(ItnEngineTest, CoveringDateRendersFormally) {
  EXPECT_EQ(Norm("october twenty twenty twenty"), "October 20, 2020");
  EXPECT_EQ(Norm("june twenty two thousand four"), "June 20, 2004");
  // A trailing period does not break the covering-span rule, and a spoken
  // ordinal day keeps its suffix.
  EXPECT_EQ(Norm("july four seventeen seventy six."), "July 4, 1776.");
  EXPECT_EQ(Norm("july fourth seventeen seventy six."), "July 4th, 1776.");
}

TEST(ItnEngineTest, EmbeddedDateRendersAsAFragment) {
  EXPECT_EQ(Norm("we met october twenty twenty twenty there"),
            "we met october 20 2020 there");
  EXPECT_EQ(Norm("ten twenty nine gmt november twenty nine twenty twelve"),
            "10:29 gmt november 29 2012");
  // Unlike the formal form, a fragment writes an ordinal day as a bare
  // number.
  EXPECT_EQ(Norm("ten twenty nine gmt november twenty ninth twenty twelve"),
            "10:29 gmt november 29 2012");
  EXPECT_EQ(Norm("we left on june twenty first that year"),
            "we left on june 21 that year");
}

TEST(ItnEngineTest, MixedPercentCurrencyAndMinorUnits) {
  EXPECT_EQ(Norm("four percent of five dollars is twenty cents"),
            "4% of $5 is 20 cents");
}

TEST(ItnEngineTest, MagnitudeDigitFillBindsToTheCurrency) {
  EXPECT_EQ(Norm("it was priced at three thousand six four nine point eight "
                "four dollars"),
            "it was priced at $3649.84");
}

TEST(ItnEngineTest, PhoneNumbersTakeTheTemplateForm) {
  EXPECT_EQ(Norm("call one eight hundred two five five seven eight two eight"),
            "call 1-800-255-7828");
  EXPECT_EQ(Norm("two four four six zero five seven five five nine"),
            "244-605-7559");
}

TEST(ItnEngineTest, PhoneTaggingFollowsTheGrammar) {
  Grammar no_phone =
      CompileGrammarText("schema_version = 1\nlocale = test\n", "np.lex");
  // Ten digit words with no phone patterns stay one long cardinal.
  EXPECT_EQ(Itn(no_phone, "two four four six zero five seven five five nine"),
            "2446057559");
}

TEST(ItnEngineTest, TimesAndTimeWords) {
  EXPECT_EQ(Norm("any time not not at noon or two or four"),
            "any time not not at 12:00 pm or 2:00 or 4:00");
  EXPECT_EQ(Norm("at seven forty five pm"), "at 7:45 pm");
  EXPECT_EQ(Norm("ten twenty nine gmt"), "10:29 gmt");
  EXPECT_EQ(Norm("around midnight"), "around 12:00 am");
}

TEST(ItnEngineTest, YearsOrdinalsFractionsMeasures) {
  EXPECT_EQ(Norm("in nineteen eighty four"), "in 1984");
  EXPECT_EQ(Norm("she finished in twenty ninth place"),
            "she finished in 29th place");
  EXPECT_EQ(Norm("in hundredth place"), "in 100th place");
  EXPECT_EQ(Norm("the tank was three quarters full"), "the tank was 3/4 full");
  EXPECT_EQ(Norm("one hundredth"), "1/100");
  EXPECT_EQ(Norm("two point five percent"), "2.5%");
  EXPECT_EQ(Norm("the road ran for two hundred fifty miles"),
            "the road ran for 250 miles");
  EXPECT_EQ(Norm("the pole is one foot short"), "the pole is 1 foot short");
  EXPECT_EQ(Norm("four point seven five dollars"), "$4.75");
}

TEST(ItnEngineTest, PlainWordsPassThroughUntouched) {
  EXPECT_EQ(Norm("nothing numeric here at all"), "nothing numeric here at all");
  EXPECT_EQ(Norm(""), "");
  // Unknown words next to entities are not disturbed.
  EXPECT_EQ(Norm("roughly twenty zorbles"), "roughly 20 zorbles");
}

TEST(ItnEngineTest, RunningTwiceChangesNothing) {
  const char* inputs[] = {
      "two thousand one hundred five",
      "october twenty twenty twenty",
      "four percent of five dollars is twenty cents",
      "call one eight hundred two five five seven eight two eight",
      "it was priced at three thousand six four nine point eight four dollars",
      "she finished in twenty ninth place",
      "any time not not at noon or two or four",
      "nothing numeric here",
  };
  for (const char* spoken : inputs) {
    std::string once = Norm(spoken);
    EXPECT_EQ(Norm(once), once) << spoken;
  }
}

TEST(ItnEngineTest, SpansAreSortedDisjointAndClassified) {
  ItnOutput out = ItnWithSpans(
      DefaultGrammar(),
      "four percent of five dollars is twenty cents on october third");
  ASSERT_FALSE(out.spans.empty());
  size_t last_end = 0;
  for (const EntitySpan& span : out.spans) {
    EXPECT_LT(span.begin, span.end);
    EXPECT_GE(span.begin, last_end);
    EXPECT_NE(span.cls, SemioticClass::kPlainWord);
    last_end = span.end;
  }
  Sentence tokens = Tokenize(
      "four percent of five dollars is twenty cents on october third");
  EXPECT_LE(last_end, tokens.tokens.size());
}

TEST(ItnEngineTest, SameLengthTieGoesToTheHigherClass) {
  // "twenty twenty" alone could be a year or a pair-read cardinal; the date
  // and year machinery outranks the plain cardinal reading.
  EXPECT_EQ(Norm("twenty twenty"), "2020");
  // "noon" is a time word even where a measure word follows.
  EXPECT_EQ(Norm("at noon today"), "at 12:00 pm today");
}

TEST(ItnEngineTest, KeepsSurroundingPunctuationInPlace) {
  EXPECT_EQ(Norm("it cost five dollars, right?"), "it cost $5, right?");
  EXPECT_EQ(Norm("\"twenty\" she said."), "\"20\" she said.");
}

}  // namespace
}  // namespace itn
