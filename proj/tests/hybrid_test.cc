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
// Exercises the backend wire protocol and the confidence gate against the
// mock backend binary (path injected as MOCK_BACKEND_BIN), including every
// way the backend can misbehave: hangs, crashes, garbage, stale and
// out-of-order ids, and confidences outside [0, 1].

#include "itn/hybrid.h"

#include <fstream>
#include <regex>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "itn/grammar.h"
#include "itn/renderer.h"

namespace itn {
namespace {

std::string Mock(const std::string& flags) {
  std::string cmd = MOCK_BACKEND_BIN;
  if (!flags.empty()) cmd += " " + flags;
  return cmd;
}

// Writes a --script rewrite file (input<TAB>output per line) into the test
// temp dir and returns its path.
std::string WriteScript(
    const std::string& name,
    const std::vector<std::pair<std::string, std::string>>& rules) {
  std::string path = testing::TempDir() + name;
  std::ofstream out(path);
  for (const auto& [input, output] : rules) {
    out << input << "\t" << output << "\n";
  }
  return path;
}

TEST(BackendClientTest, EchoesTextWithConfidence) {
  BackendClient client(Mock("--confidence 0.75"), 2000);
  BackendResponse response;
  ASSERT_EQ(client.Request("twenty twenty", &response), BackendStatus::kOk);
  EXPECT_EQ(response.text, "twenty twenty");
  EXPECT_DOUBLE_EQ(response.confidence, 0.75);
  EXPECT_FALSE(response.clamped);
  EXPECT_TRUE(client.alive());
}

TEST(BackendClientTest, OutOfRangeConfidenceIsClamped) {
  BackendClient high(Mock("--confidence 1.7"), 2000);
  BackendResponse response;
  ASSERT_EQ(high.Request("hello", &response), BackendStatus::kOk);
  EXPECT_DOUBLE_EQ(response.confidence, 1.0);
  EXPECT_TRUE(response.clamped);

  BackendClient low(Mock("--confidence -0.5"), 2000);
  ASSERT_EQ(low.Request("hello", &response), BackendStatus::kOk);
  EXPECT_DOUBLE_EQ(response.confidence, 0.0);
  EXPECT_TRUE(response.clamped);
}

TEST(BackendClientTest, GarbageLinesAreProtocolErrors) {
  BackendClient client(Mock("--garbage"), 2000);
  BackendResponse response;
  EXPECT_EQ(client.Request("one", &response), BackendStatus::kProtocolError);
  // The child keeps running and keeps misbehaving.
  EXPECT_TRUE(client.alive());
  EXPECT_EQ(client.Request("two", &response), BackendStatus::kProtocolError);
}

TEST(BackendClientTest, ValidJsonMissingFieldsIsAProtocolError) {
  // cat echoes the request line, which has no confidence field.
  BackendClient client("cat", 2000);
  BackendResponse response;
  EXPECT_EQ(client.Request("one", &response), BackendStatus::kProtocolError);
}

TEST(BackendClientTest, ResponseForAFutureIdIsAProtocolError) {
  BackendClient client(
      "printf '{\"id\":999,\"text\":\"x\",\"confidence\":1.0}\\n'; "
      "cat >/dev/null",
      2000);
  BackendResponse response;
  EXPECT_EQ(client.Request("one", &response), BackendStatus::kProtocolError);
}

TEST(BackendClientTest, StaleDuplicateResponsesAreSkipped) {
  BackendClient client(Mock("--extra-response --confidence 1.0"), 2000);
  BackendResponse response;
  ASSERT_EQ(client.Request("first", &response), BackendStatus::kOk);
  EXPECT_EQ(response.text, "first");
  // The mock re-sends the id-0 response ahead of the id-1 one; the client
  // must discard the stale line and return the fresh answer.
  ASSERT_EQ(client.Request("second", &response), BackendStatus::kOk);
  EXPECT_EQ(response.text, "second");
}

TEST(BackendClientTest, HangTimesOutThenStaysUnavailable) {
  BackendClient client(Mock("--hang"), 150);
  BackendResponse response;
  EXPECT_EQ(client.Request("one", &response), BackendStatus::kTimeout);
  EXPECT_FALSE(client.alive());
  EXPECT_EQ(client.Request("two", &response), BackendStatus::kUnavailable);
}

TEST(BackendClientTest, ImmediateExitIsUnavailable) {
  BackendClient client("exit 0", 2000);
  BackendResponse response;
  EXPECT_EQ(client.Request("one", &response), BackendStatus::kUnavailable);
  EXPECT_FALSE(client.alive());
}

TEST(BackendClientTest, CrashAfterServingLeavesClientDead) {
  BackendClient client(Mock("--crash-after 1 --confidence 1.0"), 2000);
  BackendResponse response;
  ASSERT_EQ(client.Request("one", &response), BackendStatus::kOk);
  EXPECT_EQ(client.Request("two", &response), BackendStatus::kUnavailable);
  EXPECT_FALSE(client.alive());
}

TEST(HybridEngineTest, NoBackendCommandRunsRulesOnly) {
  HybridConfig config;
  config.backend_command.clear();
  HybridEngine engine(DefaultGrammar(), config);
  HybridResult result = engine.Normalize("it cost twenty dollars");
  EXPECT_EQ(result.text, "it cost $20");
  EXPECT_EQ(result.path, HybridPath::kRuleNoBackend);
  EXPECT_EQ(result.status, BackendStatus::kUnavailable);
  EXPECT_FALSE(result.confidence.has_value());
}

TEST(HybridEngineTest, ConfidentBackendTextIsUsedAndThenNormalized) {
  // The script proves the backend's words (not the input) reach the rule
  // pass: rules alone would leave "four score" untouched.
  std::string script =
      WriteScript("hybrid_rewrites.tsv", {{"four score", "twenty twenty"}});
  HybridConfig config;
  config.backend_command = Mock("--confidence 1.0 --script " + script);
  config.threshold = 0.9;
  HybridEngine engine(DefaultGrammar(), config);
  HybridResult result = engine.Normalize("four score");
  EXPECT_EQ(result.text, "2020");
  EXPECT_EQ(result.path, HybridPath::kNeural);
  EXPECT_EQ(result.status, BackendStatus::kOk);
  ASSERT_TRUE(result.confidence.has_value());
  EXPECT_DOUBLE_EQ(*result.confidence, 1.0);
}

TEST(HybridEngineTest, LowConfidenceFallsBackToRules) {
  std::string script =
      WriteScript("hybrid_bad.tsv", {{"twenty dollars", "nonsense output"}});
  HybridConfig config;
  config.backend_command = Mock("--confidence 0.2 --script " + script);
  config.threshold = 0.9;
  HybridEngine engine(DefaultGrammar(), config);
  HybridResult result = engine.Normalize("twenty dollars");
  EXPECT_EQ(result.text, "$20");
  EXPECT_EQ(result.path, HybridPath::kRuleLowConfidence);
  ASSERT_TRUE(result.confidence.has_value());
  EXPECT_DOUBLE_EQ(*result.confidence, 0.2);
}

TEST(HybridEngineTest, ThresholdZeroAcceptsZeroConfidence) {
  std::string script =
      WriteScript("hybrid_zero.tsv", {{"whatever", "twenty twenty"}});
  HybridConfig config;
  config.backend_command = Mock("--confidence 0.0 --script " + script);
  config.threshold = 0.0;
  HybridEngine engine(DefaultGrammar(), config);
  HybridResult result = engine.Normalize("whatever");
  EXPECT_EQ(result.text, "2020");
  EXPECT_EQ(result.path, HybridPath::kNeural);
}

TEST(HybridEngineTest, ClampedConfidenceStillPassesTheGate) {
  HybridConfig config;
  config.backend_command = Mock("--confidence 9.9");
  config.threshold = 0.9;
  HybridEngine engine(DefaultGrammar(), config);
  HybridResult result = engine.Normalize("twenty twenty");
  EXPECT_EQ(result.path, HybridPath::kNeural);
  EXPECT_TRUE(result.confidence_clamped);
  ASSERT_TRUE(result.confidence.has_value());
  EXPECT_DOUBLE_EQ(*result.confidence, 1.0);
  EXPECT_EQ(result.text, "2020");
}

TEST(HybridEngineTest, TimeoutFallsBackAndStaysOnRules) {
  HybridConfig config;
  config.backend_command = Mock("--hang");
  config.timeout_ms = 150;
  HybridEngine engine(DefaultGrammar(), config);

  HybridResult first = engine.Normalize("twenty dollars");
  EXPECT_EQ(first.text, "$20");
  EXPECT_EQ(first.path, HybridPath::kRuleBackendError);
  EXPECT_EQ(first.status, BackendStatus::kTimeout);
  EXPECT_FALSE(first.confidence.has_value());

  HybridResult second = engine.Normalize("twenty twenty");
  EXPECT_EQ(second.text, "2020");
  EXPECT_EQ(second.path, HybridPath::kRuleBackendError);
  EXPECT_EQ(second.status, BackendStatus::kUnavailable);
}

TEST(HybridEngineTest, MidStreamCrashDegradesToRules) {
  HybridConfig config;
  config.backend_command = Mock("--crash-after 2 --confidence 1.0");
  config.threshold = 0.9;
  HybridEngine engine(DefaultGrammar(), config);

  std::vector<std::string> inputs = {"one dollar", "two dollars",
                                     "three dollars", "four dollars"};
  std::vector<std::string> expected = {"$1", "$2", "$3", "$4"};
  std::vector<HybridPath> paths;
  for (size_t i = 0; i < inputs.size(); ++i) {
    HybridResult result = engine.Normalize(inputs[i]);
    EXPECT_EQ(result.text, expected[i]) << i;
    paths.push_back(result.path);
  }
  EXPECT_EQ(paths, (std::vector<HybridPath>{
                       HybridPath::kNeural, HybridPath::kNeural,
                       HybridPath::kRuleBackendError,
                       HybridPath::kRuleBackendError}));
}

TEST(HybridEngineTest, CorrectionsRewriteBackendTextBeforeRules) {
  std::string script = WriteScript(
      "hybrid_typo.tsv", {{"fix me", "teh year twenty twenty was teh best"}});
  HybridConfig config;
  config.backend_command = Mock("--confidence 1.0 --script " + script);
  config.corrections = {{"\\bteh\\b", "the"}};
  HybridEngine engine(DefaultGrammar(), config);
  HybridResult result = engine.Normalize("fix me");
  EXPECT_EQ(result.text, "the year 2020 was the best");
  EXPECT_EQ(result.path, HybridPath::kNeural);
}

TEST(HybridEngineTest, CorrectionsApplyInOrder) {
  std::string script = WriteScript("hybrid_chain.tsv", {{"go", "alpha"}});
  HybridConfig config;
  config.backend_command = Mock("--confidence 1.0 --script " + script);
  config.corrections = {{"alpha", "beta"}, {"beta", "gamma"}};
  HybridEngine engine(DefaultGrammar(), config);
  EXPECT_EQ(engine.Normalize("go").text, "gamma");
}

TEST(HybridEngineTest, CorrectionsAreNotAppliedOnRulePaths) {
  HybridConfig config;
  config.backend_command.clear();
  config.corrections = {{"twenty", "thirty"}};
  HybridEngine engine(DefaultGrammar(), config);
  // Corrections only clean up accepted backend text; without a backend the
  // input goes straight to the rules.
  EXPECT_EQ(engine.Normalize("twenty dollars").text, "$20");
}

TEST(HybridEngineTest, BadCorrectionPatternThrowsAtConstruction) {
  HybridConfig config;
  config.corrections = {{"(", "x"}};
  EXPECT_THROW(HybridEngine(DefaultGrammar(), config), std::regex_error);
}

TEST(HybridEngineTest, ManyLinesComeBackInOrder) {
  HybridConfig config;
  config.backend_command = Mock("--confidence 1.0");
  config.threshold = 0.9;
  HybridEngine engine(DefaultGrammar(), config);
  const Grammar& grammar = DefaultGrammar();
  for (int i = 1; i <= 50; ++i) {
    std::string spoken =
        "the count hit twenty " + std::string(i % 2 ? "one" : "two") +
        " at position number " + std::to_string(i);
    HybridResult result = engine.Normalize(spoken);
    EXPECT_EQ(result.path, HybridPath::kNeural) << i;
    EXPECT_EQ(result.text, Itn(grammar, spoken)) << i;
  }
}

TEST(HybridEngineTest, SecondPassLeavesOutputAlone) {
  HybridConfig config;
  config.backend_command = Mock("--confidence 1.0");
  config.threshold = 0.9;
  HybridEngine engine(DefaultGrammar(), config);
  std::vector<std::string> inputs = {
      "it was priced at three thousand six four nine point eight four dollars",
      "call one eight hundred two five five seven eight two eight",
      "four percent of five dollars is twenty cents",
  };
  for (const std::string& input : inputs) {
    std::string once = engine.Normalize(input).text;
    EXPECT_EQ(engine.Normalize(once).text, once) << input;
  }
}

}  // namespace
}  // namespace itn
