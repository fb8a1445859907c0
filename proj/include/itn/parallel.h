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

#ifndef ITN_PARALLEL_H_
#define ITN_PARALLEL_H_

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <istream>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace itn {

// Applies fn to every line of in and writes one result per line to out, in
// input order. With jobs > 1, lines are handled in fixed-size batches by a
// small thread pool, so memory use is bounded by the batch, not the stream.
// fn must be safe to call from several threads at once.
inline void ForEachLineParallel(
    std::istream& in, std::ostream& out, unsigned jobs,
    const std::function<std::string(const std::string&)>& fn) {
  if (jobs <= 1) {
    std::string line;
    while (std::getline(in, line)) {
      out << fn(line) << '\n';
    }
    return;
  }

  const size_t batch_size = static_cast<size_t>(jobs) * 32;
  std::vector<std::string> lines;
  lines.reserve(batch_size);
  std::string line;
  bool more = true;
  while (more) {
    lines.clear();
    while (lines.size() < batch_size &&
           (more = static_cast<bool>(std::getline(in, line)))) {
      lines.push_back(line);
    }
    if (lines.empty()) break;

    std::vector<std::string> results(lines.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&]() {
      try {
        for (size_t i = next.fetch_add(1); i < lines.size();
             i = next.fetch_add(1)) {
          if (failed.load()) return;
          results[i] = fn(lines[i]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        failed.store(true);
      }
    };

    size_t n = std::min<size_t>(jobs, lines.size());
    std::vector<std::thread> threads;
    threads.reserve(n);
    for (size_t t = 0; t < n; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
    if (error) std::rethrow_exception(error);

    for (const std::string& result : results) {
      out << result << '\n';
    }
  }
}

}  // namespace itn

#endif  // ITN_PARALLEL_H_
