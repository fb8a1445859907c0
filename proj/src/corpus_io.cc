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

#include "itn/corpus_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace itn {

namespace {

using nlohmann::json;

const SemioticClass kAllClasses[] = {
    SemioticClass::kCardinal, SemioticClass::kOrdinal,
    SemioticClass::kFraction, SemioticClass::kDecimal,
    SemioticClass::kYear,     SemioticClass::kDate,
    SemioticClass::kTime,     SemioticClass::kCurrency,
    SemioticClass::kPercent,  SemioticClass::kMeasure,
    SemioticClass::kPhone,    SemioticClass::kPlainWord,
};

SemioticClass ParseSemioticClass(const std::string& name, size_t line) {
  for (SemioticClass cls : kAllClasses) {
    if (name == SemioticClassName(cls)) return cls;
  }
  throw CorpusIoError("line " + std::to_string(line) +
                      ": unknown semiotic class \"" + name + "\"");
}

void CheckWritable(const std::string& field, const std::string& value) {
  if (value.find('\t') != std::string::npos ||
      value.find('\n') != std::string::npos) {
    throw CorpusIoError(field + " contains a tab or newline: \"" + value +
                        "\"");
  }
}

[[noreturn]] void BadLine(size_t line, const std::string& why) {
  throw CorpusIoError("line " + std::to_string(line) + ": " + why);
}

}  // namespace

void WriteCorpusTsv(std::ostream& out,
                    const std::vector<ParallelPair>& pairs) {
  for (const ParallelPair& pair : pairs) {
    CheckWritable("spoken", pair.spoken);
    CheckWritable("written", pair.written);
    out << pair.spoken << '\t' << pair.written << '\t'
        << ProvenanceName(pair.provenance) << '\n';
  }
}

std::vector<ParallelPair> ReadCorpusTsv(std::istream& in) {
  std::vector<ParallelPair> pairs;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    size_t first = line.find('\t');
    if (first == std::string::npos) BadLine(line_number, "expected 3 columns");
    size_t second = line.find('\t', first + 1);
    if (second == std::string::npos) BadLine(line_number, "expected 3 columns");
    if (line.find('\t', second + 1) != std::string::npos) {
      BadLine(line_number, "expected 3 columns");
    }
    ParallelPair pair;
    pair.spoken = line.substr(0, first);
    pair.written = line.substr(first + 1, second - first - 1);
    std::string provenance = line.substr(second + 1);
    std::optional<Provenance> p = ParseProvenance(provenance);
    if (!p) BadLine(line_number, "unknown provenance \"" + provenance + "\"");
    pair.provenance = *p;
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

void WriteCorpusJsonl(std::ostream& out,
                      const std::vector<ParallelPair>& pairs) {
  for (const ParallelPair& pair : pairs) {
    json record;
    record["spoken"] = pair.spoken;
    record["written"] = pair.written;
    record["provenance"] = ProvenanceName(pair.provenance);
    json classes = json::array();
    for (SemioticClass cls : pair.entity_classes) {
      classes.push_back(SemioticClassName(cls));
    }
    record["classes"] = std::move(classes);
    out << record.dump() << '\n';
  }
}

std::vector<ParallelPair> ReadCorpusJsonl(std::istream& in) {
  std::vector<ParallelPair> pairs;
  std::string line;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      BadLine(line_number, e.what());
    }
    if (!record.is_object() || !record.contains("spoken") ||
        !record.contains("written") || !record.contains("provenance") ||
        !record["spoken"].is_string() || !record["written"].is_string() ||
        !record["provenance"].is_string()) {
      BadLine(line_number,
              "expected an object with spoken, written and provenance");
    }
    ParallelPair pair;
    pair.spoken = record["spoken"].get<std::string>();
    pair.written = record["written"].get<std::string>();
    std::optional<Provenance> p =
        ParseProvenance(record["provenance"].get<std::string>());
    if (!p) {
      BadLine(line_number, "unknown provenance \"" +
                               record["provenance"].get<std::string>() + "\"");
    }
    pair.provenance = *p;
    if (record.contains("classes")) {
      if (!record["classes"].is_array()) {
        BadLine(line_number, "classes must be an array");
      }
      for (const json& name : record["classes"]) {
        if (!name.is_string()) BadLine(line_number, "classes must be strings");
        pair.entity_classes.push_back(
            ParseSemioticClass(name.get<std::string>(), line_number));
      }
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

namespace {

bool HasSuffix(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

void WriteCorpusFile(const std::string& path,
                     const std::vector<ParallelPair>& pairs) {
  bool tsv = HasSuffix(path, ".tsv");
  if (!tsv && !HasSuffix(path, ".jsonl")) {
    throw CorpusIoError("unsupported corpus extension: " + path);
  }
  std::ofstream out(path);
  if (!out) throw CorpusIoError("cannot open " + path + " for writing");
  if (tsv) {
    WriteCorpusTsv(out, pairs);
  } else {
    WriteCorpusJsonl(out, pairs);
  }
  if (!out) throw CorpusIoError("failed while writing " + path);
}

std::vector<ParallelPair> ReadCorpusFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CorpusIoError("cannot open " + path);
  if (HasSuffix(path, ".tsv")) return ReadCorpusTsv(in);
  if (HasSuffix(path, ".jsonl")) return ReadCorpusJsonl(in);
  throw CorpusIoError("unsupported corpus extension: " + path);
}

}  // namespace itn
