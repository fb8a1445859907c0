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

#ifndef ITN_HYBRID_H_
#define ITN_HYBRID_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "itn/grammar.h"

namespace itn {

enum class BackendStatus {
  kOk,
  kTimeout,
  kProtocolError,
  kUnavailable,
};

struct BackendResponse {
  std::string text;
  double confidence = 0.0;
  // True when the reported confidence fell outside [0, 1] (or was NaN)
  // and had to be clamped.
  bool clamped = false;
};

// Speaks line-delimited JSON with a subprocess: one {"id": N, "text": ...}
// request per line on its stdin, one {"id": N, "text": ..., "confidence": C}
// response per line on its stdout. One request is in flight at a time.
// A timeout kills the child; from then on every call reports kUnavailable.
// Stale responses (an id lower than the current request) are discarded.
class BackendClient {
 public:
  // The command is run through /bin/sh -c on first use.
  BackendClient(std::string command, int timeout_ms);
  ~BackendClient();
  BackendClient(const BackendClient&) = delete;
  BackendClient& operator=(const BackendClient&) = delete;

  BackendStatus Request(const std::string& text, BackendResponse* response);

  bool alive() const { return state_ == State::kRunning; }

 private:
  enum class State { kNotStarted, kRunning, kDead };

  bool Start();
  void Kill();
  // Fills *line with the next newline-terminated chunk of child stdout,
  // waiting no longer than the deadline (a steady-clock millisecond stamp).
  BackendStatus ReadResponseLine(std::string* line, int64_t deadline_ms);

  std::string command_;
  int timeout_ms_;
  State state_ = State::kNotStarted;
  int child_pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
  uint64_t next_id_ = 0;
};

struct HybridConfig {
  // Minimum backend confidence for its output to be used.
  double threshold = 0.9;
  // Backend command line; empty means rule engine only.
  std::string backend_command;
  int timeout_ms = 2000;
  // Regex replacements applied in order to accepted backend text before the
  // rule pass runs over it.
  std::vector<std::pair<std::string, std::string>> corrections;
};

enum class HybridPath {
  kNeural,
  kRuleLowConfidence,
  kRuleBackendError,
  kRuleNoBackend,
};

struct HybridResult {
  std::string text;
  HybridPath path = HybridPath::kRuleNoBackend;
  // Set only when the backend produced a response.
  std::optional<double> confidence;
  bool confidence_clamped = false;
  BackendStatus status = BackendStatus::kUnavailable;
};

// Confidence-gated combination of the rule engine with an opaque backend.
// When the backend answers confidently, its text (after corrections) is run
// through the rule engine; otherwise the rule engine handles the raw input.
class HybridEngine {
 public:
  // May throw std::regex_error if a correction pattern does not compile.
  HybridEngine(const Grammar& grammar, HybridConfig config);

  HybridResult Normalize(const std::string& spoken);

 private:
  const Grammar& grammar_;
  HybridConfig config_;
  std::unique_ptr<BackendClient> backend_;
  std::vector<std::pair<std::regex, std::string>> corrections_;
};

}  // namespace itn

#endif  // ITN_HYBRID_H_
