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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "itn/align.h"
#include "itn/corpus_io.h"
#include "itn/datagen.h"
#include "itn/grammar.h"
#include "itn/hybrid.h"
#include "itn/metrics.h"
#include "itn/parallel.h"
#include "itn/renderer.h"
#include "itn/tn.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitRecordFailures = 1;
constexpr int kExitConfig = 2;

std::string Percent(const std::optional<double>& ratio) {
  if (!ratio.has_value()) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f%%", *ratio * 100.0);
  return buf;
}

// Runs body with the configured streams, falling back to stdin/stdout.
template <typename Fn>
int WithStreams(const std::string& in_path, const std::string& out_path,
                Fn body) {
  std::ifstream file_in;
  std::ofstream file_out;
  std::istream* in = &std::cin;
  std::ostream* out = &std::cout;
  if (!in_path.empty()) {
    file_in.open(in_path);
    if (!file_in) {
      std::cerr << "cannot open input " << in_path << "\n";
      return kExitConfig;
    }
    in = &file_in;
  }
  if (!out_path.empty()) {
    file_out.open(out_path);
    if (!file_out) {
      std::cerr << "cannot open output " << out_path << "\n";
      return kExitConfig;
    }
    out = &file_out;
  }
  return body(*in, *out);
}

std::string DenormalizeLine(const itn::Grammar& grammar,
                            const std::string& line) {
  itn::TnResult tn = itn::Tn(grammar, line);
  itn::Sentence restorable = itn::WrittenForRestoration(tn);
  return itn::RestorePunctuation(restorable, tn.spoken).raw;
}

// Applies fn to each input on jobs threads, output slot per input index.
std::vector<std::string> MapStrings(
    unsigned jobs, const std::vector<std::string>& inputs,
    const std::function<std::string(const std::string&)>& fn) {
  std::vector<std::string> out(inputs.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < inputs.size(); ++i) out[i] = fn(inputs[i]);
    return out;
  }
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t i = next.fetch_add(1); i < inputs.size();
         i = next.fetch_add(1)) {
      out[i] = fn(inputs[i]);
    }
  };
  size_t n = std::min<size_t>(jobs, inputs.size());
  std::vector<std::thread> threads;
  threads.reserve(n);
  for (size_t t = 0; t < n; ++t) threads.emplace_back(worker);
  for (std::thread& t : threads) t.join();
  return out;
}

struct GroupRow {
  size_t words = 0;
  size_t errors = 0;
};

std::map<std::string, GroupRow> GroupReport(const itn::EvalReport& report) {
  std::map<std::string, GroupRow> groups;
  for (const auto& [cls, n] : report.class_ref_words) {
    groups[itn::ClassGroup(cls)].words += n;
  }
  for (const auto& [cls, n] : report.class_errors) {
    groups[itn::ClassGroup(cls)].errors += n;
  }
  return groups;
}

const char* const kGroupOrder[] = {"Numbers", "Units", "Date Time", "Misc"};

void PrintReport(std::ostream& out, const itn::EvalReport& report,
                 size_t scored, size_t skipped) {
  out << "pairs scored: " << scored;
  if (skipped > 0) out << " (skipped " << skipped << ")";
  out << "\n";
  out << "reference words: " << report.ref_words << " (itn "
      << report.ref_itn_words << ", non-itn "
      << report.ref_words - report.ref_itn_words << ")\n";
  out << "wer: " << Percent(report.wer) << " (" << report.errors_total
      << " errors)\n";
  out << "i-wer: " << Percent(report.i_wer) << " (" << report.errors_itn
      << " errors)\n";
  out << "ni-wer: " << Percent(report.ni_wer) << " (" << report.errors_nitn
      << " errors)\n";

  std::map<std::string, GroupRow> groups = GroupReport(report);
  if (groups.empty()) return;
  out << "\n"
      << std::left << std::setw(12) << "class" << std::right << std::setw(8)
      << "words" << std::setw(8) << "errors" << std::setw(9) << "wer"
      << "\n";
  for (const char* name : kGroupOrder) {
    auto it = groups.find(name);
    if (it == groups.end()) continue;
    std::optional<double> wer;
    if (it->second.words > 0) {
      wer = static_cast<double>(it->second.errors) /
            static_cast<double>(it->second.words);
    }
    out << std::left << std::setw(12) << name << std::right << std::setw(8)
        << it->second.words << std::setw(8) << it->second.errors
        << std::setw(9) << Percent(wer) << "\n";
  }
}

json RatioOrNull(const std::optional<double>& v) {
  return v.has_value() ? json(*v) : json(nullptr);
}

void PrintReportJson(std::ostream& out, const itn::EvalReport& report,
                     size_t scored, size_t skipped) {
  json j;
  j["pairs_scored"] = scored;
  j["pairs_skipped"] = skipped;
  j["ref_words"] = report.ref_words;
  j["ref_itn_words"] = report.ref_itn_words;
  j["errors_total"] = report.errors_total;
  j["errors_itn"] = report.errors_itn;
  j["errors_nitn"] = report.errors_nitn;
  j["wer"] = RatioOrNull(report.wer);
  j["i_wer"] = RatioOrNull(report.i_wer);
  j["ni_wer"] = RatioOrNull(report.ni_wer);
  json classes = json::object();
  for (const auto& [name, row] : GroupReport(report)) {
    json entry;
    entry["ref_words"] = row.words;
    entry["errors"] = row.errors;
    entry["wer"] = row.words > 0
                       ? json(static_cast<double>(row.errors) /
                              static_cast<double>(row.words))
                       : json(nullptr);
    classes[name] = std::move(entry);
  }
  j["classes"] = std::move(classes);
  out << j.dump(2) << "\n";
}

const char* PathName(itn::HybridPath path) {
  switch (path) {
    case itn::HybridPath::kNeural:
      return "neural";
    case itn::HybridPath::kRuleLowConfidence:
      return "rule (low confidence)";
    case itn::HybridPath::kRuleBackendError:
      return "rule (backend error)";
    case itn::HybridPath::kRuleNoBackend:
      return "rule (no backend)";
  }
  return "unknown";
}

int RunEvaluate(const itn::Grammar& grammar, const std::string& corpus_path,
                const std::string& hyp_path, bool as_json, unsigned jobs,
                long long max_errors) {
  std::vector<itn::ParallelPair> pairs;
  try {
    pairs = itn::ReadCorpusFile(corpus_path);
  } catch (const itn::CorpusIoError& e) {
    std::cerr << corpus_path << ": " << e.what() << "\n";
    return kExitConfig;
  }

  std::vector<std::string> hypotheses;
  if (!hyp_path.empty()) {
    std::ifstream in(hyp_path);
    if (!in) {
      std::cerr << "cannot open hypotheses " << hyp_path << "\n";
      return kExitConfig;
    }
    std::string line;
    while (std::getline(in, line)) hypotheses.push_back(line);
    if (hypotheses.size() != pairs.size()) {
      std::cerr << "hypothesis count " << hypotheses.size()
                << " does not match corpus size " << pairs.size() << "\n";
      return kExitConfig;
    }
  } else {
    std::vector<std::string> spoken;
    spoken.reserve(pairs.size());
    for (const auto& pair : pairs) spoken.push_back(pair.spoken);
    hypotheses = MapStrings(jobs, spoken, [&grammar](const std::string& s) {
      return itn::Itn(grammar, s);
    });
  }

  std::vector<itn::TaggedReference> refs;
  std::vector<itn::Sentence> hyps;
  size_t failures = 0;
  for (size_t i = 0; i < pairs.size(); ++i) {
    try {
      itn::TaggedReference ref =
          itn::MakeTaggedReference(pairs[i].spoken, pairs[i].written);
      ref.classes =
          itn::ClassifyReferenceWords(grammar, pairs[i].spoken, ref.words);
      refs.push_back(std::move(ref));
      hyps.push_back(itn::SplitWords(hypotheses[i]));
    } catch (const itn::MetricsError& e) {
      ++failures;
      std::cerr << "record " << i + 1 << ": " << e.what() << "\n";
    }
  }

  itn::EvalReport report = itn::ScoreCorpus(refs, hyps);
  if (as_json) {
    PrintReportJson(std::cout, report, refs.size(), failures);
  } else {
    PrintReport(std::cout, report, refs.size(), failures);
  }
  return failures > static_cast<size_t>(std::max(0LL, max_errors))
             ? kExitRecordFailures
             : kExitOk;
}

int RunGenData(const itn::Grammar& grammar, uint64_t seed, size_t count,
               double ratio, const std::string& in_path,
               const std::string& out_path, const std::string& format) {
  std::ofstream file_out;
  std::ostream* out = &std::cout;
  bool jsonl = format == "jsonl";
  if (!out_path.empty()) {
    bool tsv_ext = out_path.size() > 4 &&
                   out_path.compare(out_path.size() - 4, 4, ".tsv") == 0;
    bool jsonl_ext = out_path.size() > 6 &&
                     out_path.compare(out_path.size() - 6, 6, ".jsonl") == 0;
    if (!tsv_ext && !jsonl_ext) {
      std::cerr << "output must end in .tsv or .jsonl: " << out_path << "\n";
      return kExitConfig;
    }
    jsonl = jsonl_ext;
    file_out.open(out_path);
    if (!file_out) {
      std::cerr << "cannot open output " << out_path << "\n";
      return kExitConfig;
    }
    out = &file_out;
  }

  itn::CorpusBuilder builder(grammar, seed, ratio);
  std::vector<itn::ParallelPair> batch;
  std::vector<std::string> skipped;
  auto emit = [&](const std::string& line) {
    batch.clear();
    builder.AddLine(line, &batch, &skipped);
    for (const std::string& message : skipped) {
      std::cerr << message << "\n";
    }
    skipped.clear();
    if (jsonl) {
      itn::WriteCorpusJsonl(*out, batch);
    } else {
      itn::WriteCorpusTsv(*out, batch);
    }
  };

  if (!in_path.empty()) {
    std::ifstream in(in_path);
    if (!in) {
      std::cerr << "cannot open input " << in_path << "\n";
      return kExitConfig;
    }
    std::string line;
    while (std::getline(in, line)) emit(line);
  } else {
    for (const std::string& line : itn::GenerateWrittenSentences(seed, count)) {
      emit(line);
    }
  }
  out->flush();
  if (!*out) {
    std::cerr << "failed while writing output\n";
    return kExitConfig;
  }
  return kExitOk;
}

int RunStats(const std::string& corpus_path, bool as_json) {
  std::vector<itn::ParallelPair> pairs;
  try {
    pairs = itn::ReadCorpusFile(corpus_path);
  } catch (const itn::CorpusIoError& e) {
    std::cerr << corpus_path << ": " << e.what() << "\n";
    return kExitConfig;
  }
  itn::CorpusStats stats = itn::ComputeCorpusStats(pairs);
  if (as_json) {
    json j;
    j["pairs"] = stats.pairs;
    j["tn_generated"] = stats.tn_generated;
    j["synthetic"] = stats.synthetic;
    j["written_words"] = stats.written_words;
    j["itn_words"] = stats.itn_words;
    j["itn_density"] = RatioOrNull(stats.itn_density);
    json classes = json::object();
    for (const auto& [name, n] : stats.class_counts) classes[name] = n;
    j["entities"] = std::move(classes);
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "pairs: " << stats.pairs << " (tn_generated "
            << stats.tn_generated << ", synthetic " << stats.synthetic
            << ")\n";
  std::cout << "written words: " << stats.written_words << "\n";
  std::cout << "itn words: " << stats.itn_words << "\n";
  std::cout << "itn density: " << Percent(stats.itn_density) << "\n";
  if (!stats.class_counts.empty()) {
    std::cout << "entities:\n";
    for (const auto& [name, n] : stats.class_counts) {
      std::cout << "  " << std::left << std::setw(10) << name << std::right
                << std::setw(8) << n << "\n";
    }
  }
  return kExitOk;
}

int RunHybrid(const itn::Grammar& grammar, const std::string& backend,
              double threshold, int timeout_ms,
              const std::vector<std::string>& correction_flags, bool trace,
              const std::string& in_path, const std::string& out_path) {
  itn::HybridConfig config;
  config.threshold = threshold;
  config.backend_command = backend;
  config.timeout_ms = timeout_ms;
  for (const std::string& flag : correction_flags) {
    size_t sep = flag.find("=>");
    if (sep == std::string::npos || sep == 0) {
      std::cerr << "correction must look like pattern=>replacement: " << flag
                << "\n";
      return kExitConfig;
    }
    config.corrections.emplace_back(flag.substr(0, sep),
                                    flag.substr(sep + 2));
  }

  std::optional<itn::HybridEngine> engine;
  try {
    engine.emplace(grammar, config);
  } catch (const std::regex_error& e) {
    std::cerr << "bad correction pattern: " << e.what() << "\n";
    return kExitConfig;
  }

  return WithStreams(in_path, out_path, [&](std::istream& in,
                                            std::ostream& out) {
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
      ++line_number;
      itn::HybridResult result = engine->Normalize(line);
      if (result.confidence_clamped) {
        std::cerr << "line " << line_number
                  << ": backend confidence out of range, clamped\n";
      }
      if (trace) {
        std::cerr << "line " << line_number << ": " << PathName(result.path);
        if (result.confidence.has_value()) {
          std::cerr << " (confidence " << *result.confidence << ")";
        }
        std::cerr << "\n";
      }
      out << result.text << "\n";
    }
    return kExitOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);

  CLI::App app{"rule-based inverse text normalization toolkit"};
  app.require_subcommand(1);

  std::string grammar_path;
  app.add_option("--grammar", grammar_path,
                 "lexicon file (built-in en-us grammar when omitted)")
      ->envname("ITNFORGE_GRAMMAR");

  auto* normalize =
      app.add_subcommand("normalize", "spoken-form lines to written form");
  std::string norm_in, norm_out;
  unsigned norm_jobs = 1;
  normalize->add_option("--input", norm_in, "input file (default stdin)");
  normalize->add_option("--output", norm_out, "output file (default stdout)");
  normalize->add_option("--jobs", norm_jobs, "worker threads")
      ->envname("ITNFORGE_JOBS");

  auto* denormalize = app.add_subcommand(
      "denormalize", "written-form lines to spoken form with punctuation");
  std::string denorm_in, denorm_out;
  denormalize->add_option("--input", denorm_in, "input file (default stdin)");
  denormalize->add_option("--output", denorm_out,
                          "output file (default stdout)");

  auto* gen = app.add_subcommand("gen-data",
                                 "build a spoken/written parallel corpus");
  uint64_t seed = 42;
  size_t count = 1000;
  double ratio = 0.1;
  std::string gen_in, gen_out, gen_format = "tsv";
  gen->add_option("--seed", seed, "RNG seed")->envname("ITNFORGE_SEED");
  gen->add_option("--count", count,
                  "template sentences to generate when --input is absent");
  gen->add_option("--input", gen_in,
                  "written-form lines to pair up instead of templates");
  gen->add_option("--output", gen_out,
                  "corpus file, .tsv or .jsonl (default stdout)");
  gen->add_option("--synthetic-ratio", ratio,
                  "fraction of cardinal lines getting a restyled twin")
      ->check(CLI::Range(0.0, 1.0))
      ->envname("ITNFORGE_SYNTHETIC_RATIO");
  gen->add_option("--format", gen_format, "stdout format")
      ->check(CLI::IsMember({"tsv", "jsonl"}))
      ->envname("ITNFORGE_FORMAT");

  auto* evaluate = app.add_subcommand(
      "evaluate", "segmented WER of hypotheses against a corpus");
  std::string eval_corpus, eval_hyp;
  bool eval_json = false;
  unsigned eval_jobs = 1;
  long long max_errors = 0;
  evaluate->add_option("--corpus", eval_corpus, "corpus file (.tsv or .jsonl)")
      ->required();
  evaluate->add_option(
      "--hyp", eval_hyp,
      "hypothesis lines, one per corpus row (rule engine when omitted)");
  evaluate->add_flag("--json", eval_json, "machine-readable report");
  evaluate->add_option("--jobs", eval_jobs, "worker threads")
      ->envname("ITNFORGE_JOBS");
  evaluate->add_option("--max-errors", max_errors,
                       "tolerated unscorable records before exit 1")
      ->envname("ITNFORGE_MAX_ERRORS");

  auto* hybrid = app.add_subcommand(
      "hybrid-run", "confidence-gated backend with rule-engine second pass");
  std::string backend;
  double threshold = 0.9;
  int timeout_ms = 2000;
  std::vector<std::string> corrections;
  bool trace = false;
  std::string hyb_in, hyb_out;
  hybrid->add_option("--backend", backend, "backend command line")
      ->envname("ITNFORGE_BACKEND");
  hybrid->add_option("--threshold", threshold, "confidence gate")
      ->check(CLI::Range(0.0, 1.0))
      ->envname("ITNFORGE_THRESHOLD");
  hybrid->add_option("--timeout-ms", timeout_ms, "backend response deadline")
      ->envname("ITNFORGE_TIMEOUT_MS");
  hybrid->add_option("--correction", corrections,
                     "regex rewrite pattern=>replacement, repeatable");
  hybrid->add_flag("--trace", trace, "log the path taken per line to stderr");
  hybrid->add_option("--input", hyb_in, "input file (default stdin)");
  hybrid->add_option("--output", hyb_out, "output file (default stdout)");

  auto* stats = app.add_subcommand("stats", "summarize a corpus file");
  std::string stats_corpus;
  bool stats_json = false;
  stats->add_option("--corpus", stats_corpus, "corpus file (.tsv or .jsonl)")
      ->required();
  stats->add_flag("--json", stats_json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (stats->parsed()) return RunStats(stats_corpus, stats_json);

  const itn::Grammar* grammar = nullptr;
  itn::Grammar compiled;
  try {
    if (grammar_path.empty()) {
      grammar = &itn::DefaultGrammar();
    } else {
      compiled = itn::CompileGrammar({grammar_path});
      grammar = &compiled;
    }
  } catch (const itn::GrammarError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }

  if (normalize->parsed()) {
    return WithStreams(norm_in, norm_out,
                       [&](std::istream& in, std::ostream& out) {
                         itn::ForEachLineParallel(
                             in, out, norm_jobs,
                             [grammar](const std::string& line) {
                               return itn::Itn(*grammar, line);
                             });
                         return kExitOk;
                       });
  }
  if (denormalize->parsed()) {
    return WithStreams(denorm_in, denorm_out,
                       [&](std::istream& in, std::ostream& out) {
                         std::string line;
                         while (std::getline(in, line)) {
                           out << DenormalizeLine(*grammar, line) << "\n";
                         }
                         return kExitOk;
                       });
  }
  if (gen->parsed()) {
    return RunGenData(*grammar, seed, count, ratio, gen_in, gen_out,
                      gen_format);
  }
  if (evaluate->parsed()) {
    return RunEvaluate(*grammar, eval_corpus, eval_hyp, eval_json, eval_jobs,
                       max_errors);
  }
  if (hybrid->parsed()) {
    return RunHybrid(*grammar, backend, threshold, timeout_ms, corrections,
                     trace, hyb_in, hyb_out);
  }
  return kExitConfig;
}
