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
// Stand-in for a neural backend in tests and demos. Echoes each request
// (optionally rewritten through a script file) at a configurable confidence,
// and can be told to misbehave: hang, crash, emit garbage, duplicate old
// responses, or delay.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

using nlohmann::json;

int main(int argc, char** argv) {
  CLI::App app{"line-delimited JSON echo backend for tests"};
  double confidence = 1.0;
  std::string confidence_cycle;
  int delay_ms = 0;
  bool hang = false;
  long long crash_after = -1;
  bool garbage = false;
  std::string script_path;
  bool extra_response = false;

  app.add_option("--confidence", confidence,
                 "confidence attached to every response (may be out of "
                 "range on purpose)");
  app.add_option("--confidence-cycle", confidence_cycle,
                 "comma-separated confidences used round-robin, overrides "
                 "--confidence");
  app.add_option("--delay-ms", delay_ms, "sleep before each response");
  app.add_flag("--hang", hang, "consume requests but never respond");
  app.add_option("--crash-after", crash_after,
                 "exit(1) after this many responses");
  app.add_flag("--garbage", garbage, "emit a non-JSON line per request");
  app.add_option("--script", script_path,
                 "file of input<TAB>output rewrites; unmatched text echoes");
  app.add_flag("--extra-response", extra_response,
               "re-send the previous response before each new one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  std::vector<double> cycle;
  if (!confidence_cycle.empty()) {
    std::stringstream ss(confidence_cycle);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        cycle.push_back(std::stod(item));
      } catch (const std::exception&) {
        std::cerr << "bad --confidence-cycle entry: " << item << "\n";
        return 2;
      }
    }
  }

  std::map<std::string, std::string> script;
  if (!script_path.empty()) {
    std::ifstream in(script_path);
    if (!in) {
      std::cerr << "cannot open script " << script_path << "\n";
      return 2;
    }
    std::string line;
    while (std::getline(in, line)) {
      size_t tab = line.find('\t');
      if (tab == std::string::npos) continue;
      script[line.substr(0, tab)] = line.substr(tab + 1);
    }
  }

  std::string line;
  long long served = 0;
  std::string previous;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    json request = json::parse(line, nullptr, false);
    if (request.is_discarded() || !request.contains("id") ||
        !request.contains("text")) {
      continue;
    }
    if (hang) continue;
    if (delay_ms > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
    }
    if (garbage) {
      std::cout << "%% this is not a response %%" << std::endl;
      continue;
    }

    std::string text = request["text"].get<std::string>();
    auto it = script.find(text);
    if (it != script.end()) text = it->second;

    json response;
    response["id"] = request["id"];
    response["text"] = text;
    response["confidence"] =
        cycle.empty() ? confidence
                      : cycle[static_cast<size_t>(served) % cycle.size()];
    std::string out = response.dump();
    if (extra_response && !previous.empty()) {
      std::cout << previous << "\n";
    }
    std::cout << out << std::endl;
    previous = out;
    ++served;
    if (crash_after >= 0 && served >= crash_after) return 1;
  }
  return 0;
}
