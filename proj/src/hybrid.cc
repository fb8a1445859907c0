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

#include "itn/hybrid.h"

#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <climits>
#include <cmath>
#include <csignal>

#include "itn/renderer.h"
#include "json.hpp"

namespace itn {

namespace {

using nlohmann::json;

int64_t NowMs() {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

void CloseFd(int* fd) {
  if (*fd >= 0) {
    close(*fd);
    *fd = -1;
  }
}

}  // namespace

BackendClient::BackendClient(std::string command, int timeout_ms)
    : command_(std::move(command)), timeout_ms_(timeout_ms) {}

BackendClient::~BackendClient() { Kill(); }

bool BackendClient::Start() {
  // A broken pipe must surface as EPIPE from write, not kill the process.
  std::signal(SIGPIPE, SIG_IGN);

  int to_pipe[2];
  int from_pipe[2];
  if (pipe(to_pipe) != 0) {
    state_ = State::kDead;
    return false;
  }
  if (pipe(from_pipe) != 0) {
    close(to_pipe[0]);
    close(to_pipe[1]);
    state_ = State::kDead;
    return false;
  }

  pid_t pid = fork();
  if (pid < 0) {
    close(to_pipe[0]);
    close(to_pipe[1]);
    close(from_pipe[0]);
    close(from_pipe[1]);
    state_ = State::kDead;
    return false;
  }
  if (pid == 0) {
    dup2(to_pipe[0], STDIN_FILENO);
    dup2(from_pipe[1], STDOUT_FILENO);
    close(to_pipe[0]);
    close(to_pipe[1]);
    close(from_pipe[0]);
    close(from_pipe[1]);
    execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    _exit(127);
  }

  close(to_pipe[0]);
  close(from_pipe[1]);
  to_child_ = to_pipe[1];
  from_child_ = from_pipe[0];
  child_pid_ = pid;
  state_ = State::kRunning;
  return true;
}

void BackendClient::Kill() {
  CloseFd(&to_child_);
  CloseFd(&from_child_);
  if (child_pid_ > 0) {
    kill(child_pid_, SIGKILL);
    waitpid(child_pid_, nullptr, 0);
    child_pid_ = -1;
  }
  state_ = State::kDead;
}

BackendStatus BackendClient::ReadResponseLine(std::string* line,
                                              int64_t deadline_ms) {
  for (;;) {
    size_t nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      line->assign(buffer_, 0, nl);
      buffer_.erase(0, nl + 1);
      return BackendStatus::kOk;
    }

    int64_t remaining = deadline_ms - NowMs();
    if (remaining <= 0) return BackendStatus::kTimeout;

    struct pollfd pfd;
    pfd.fd = from_child_;
    pfd.events = POLLIN;
    pfd.revents = 0;
    int ready = poll(&pfd, 1, static_cast<int>(std::min<int64_t>(remaining, INT_MAX)));
    if (ready < 0) {
      if (errno == EINTR) continue;
      return BackendStatus::kUnavailable;
    }
    if (ready == 0) return BackendStatus::kTimeout;

    char chunk[4096];
    ssize_t n = read(from_child_, chunk, sizeof(chunk));
    if (n < 0) {
      if (errno == EINTR) continue;
      return BackendStatus::kUnavailable;
    }
    if (n == 0) return BackendStatus::kUnavailable;
    buffer_.append(chunk, static_cast<size_t>(n));
  }
}

BackendStatus BackendClient::Request(const std::string& text,
                                     BackendResponse* response) {
  if (state_ == State::kDead) return BackendStatus::kUnavailable;
  if (state_ == State::kNotStarted && !Start()) {
    return BackendStatus::kUnavailable;
  }

  const uint64_t id = next_id_++;
  json request;
  request["id"] = id;
  request["text"] = text;
  std::string line = request.dump();
  line.push_back('\n');

  size_t written = 0;
  while (written < line.size()) {
    ssize_t n = write(to_child_, line.data() + written, line.size() - written);
    if (n < 0) {
      if (errno == EINTR) continue;
      Kill();
      return BackendStatus::kUnavailable;
    }
    written += static_cast<size_t>(n);
  }

  const int64_t deadline = NowMs() + timeout_ms_;
  for (;;) {
    std::string response_line;
    BackendStatus status = ReadResponseLine(&response_line, deadline);
    if (status != BackendStatus::kOk) {
      // Both a hang and an exit leave the child unusable.
      Kill();
      return status;
    }

    json parsed = json::parse(response_line, nullptr, false);
    if (parsed.is_discarded() || !parsed.is_object() ||
        !parsed.contains("id") || !parsed["id"].is_number_unsigned() ||
        !parsed.contains("text") || !parsed["text"].is_string() ||
        !parsed.contains("confidence") ||
        !parsed["confidence"].is_number()) {
      return BackendStatus::kProtocolError;
    }
    uint64_t response_id = parsed["id"].get<uint64_t>();
    if (response_id < id) continue;  // stale duplicate from a past request
    if (response_id > id) return BackendStatus::kProtocolError;

    double confidence = parsed["confidence"].get<double>();
    bool clamped = false;
    if (std::isnan(confidence)) {
      confidence = 0.0;
      clamped = true;
    } else if (confidence < 0.0) {
      confidence = 0.0;
      clamped = true;
    } else if (confidence > 1.0) {
      confidence = 1.0;
      clamped = true;
    }
    response->text = parsed["text"].get<std::string>();
    response->confidence = confidence;
    response->clamped = clamped;
    return BackendStatus::kOk;
  }
}

HybridEngine::HybridEngine(const Grammar& grammar, HybridConfig config)
    : grammar_(grammar), config_(std::move(config)) {
  if (!config_.backend_command.empty()) {
    backend_ = std::make_unique<BackendClient>(config_.backend_command,
                                               config_.timeout_ms);
  }
  for (const auto& [pattern, replacement] : config_.corrections) {
    corrections_.emplace_back(std::regex(pattern), replacement);
  }
}

HybridResult HybridEngine::Normalize(const std::string& spoken) {
  HybridResult result;
  if (backend_ == nullptr) {
    result.text = Itn(grammar_, spoken);
    result.path = HybridPath::kRuleNoBackend;
    result.status = BackendStatus::kUnavailable;
    return result;
  }

  BackendResponse response;
  result.status = backend_->Request(spoken, &response);
  if (result.status != BackendStatus::kOk) {
    result.text = Itn(grammar_, spoken);
    result.path = HybridPath::kRuleBackendError;
    return result;
  }

  result.confidence = response.confidence;
  result.confidence_clamped = response.clamped;
  if (response.confidence < config_.threshold) {
    result.text = Itn(grammar_, spoken);
    result.path = HybridPath::kRuleLowConfidence;
    return result;
  }

  std::string corrected = response.text;
  for (const auto& [pattern, replacement] : corrections_) {
    corrected = std::regex_replace(corrected, pattern, replacement);
  }
  result.text = Itn(grammar_, corrected);
  result.path = HybridPath::kNeural;
  return result;
}

}  // namespace itn
