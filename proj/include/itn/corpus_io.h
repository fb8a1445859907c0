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

#ifndef ITN_CORPUS_IO_H_
#define ITN_CORPUS_IO_H_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "itn/datagen.h"

namespace itn {

// Raised on malformed corpus files; the message names the offending line.
class CorpusIoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Three tab-separated columns per line: spoken, written, provenance.
// Entity classes do not survive the TSV round trip; use JSONL to keep them.
void WriteCorpusTsv(std::ostream& out, const std::vector<ParallelPair>& pairs);
std::vector<ParallelPair> ReadCorpusTsv(std::istream& in);

// One JSON object per line with "spoken", "written", "provenance" and
// a "classes" array naming each entity in the written form.
void WriteCorpusJsonl(std::ostream& out,
                      const std::vector<ParallelPair>& pairs);
std::vector<ParallelPair> ReadCorpusJsonl(std::istream& in);

// Dispatch on the file extension: ".tsv" or ".jsonl".
void WriteCorpusFile(const std::string& path,
                     const std::vector<ParallelPair>& pairs);
std::vector<ParallelPair> ReadCorpusFile(const std::string& path);

}  // namespace itn

#endif  // ITN_CORPUS_IO_H_
