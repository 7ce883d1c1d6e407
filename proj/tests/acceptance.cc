// Copyright 2026 The saek Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance report: one PASS/FAIL line per criterion, nonzero exit on any
// failure. SAEK_DATASET names the full labeled dataset when available;
// otherwise the bundled 60-row fixture stands in.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "golden.h"
#include "fuzz.h"
#include "saek/corpus.h"
#include "saek/engine.h"
#include "saek/hangul.h"
#include "saek/text.h"

namespace saek {
namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string dataset_path() {
  const char *env = std::getenv("SAEK_DATASET");
  if (env != nullptr && *env != '\0' && std::filesystem::exists(env)) return env;
  return SAEK_FIXTURES "/sample60.tsv";
}

bool using_fixture() { return dataset_path() == SAEK_FIXTURES "/sample60.tsv"; }

// Each check returns true on success and writes a one-line detail.
bool golden_pairs(std::ostream &detail) {
  const Engine engine(Lexicon::builtin());
  const auto start = Clock::now();
  int passed = 0;
  std::string first_failure;
  for (const testing::GoldenCase &g : testing::kGoldenCases) {
    const Result r = engine.extract(g.utterance);
    const bool ok = r.classification && r.classification->label == g.label &&
                    r.argument && nfc(r.argument->text) == nfc(std::string(g.argument)) &&
                    category_tag(r.argument->category) == g.category;
    if (ok) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = std::string(g.id) + " -> ";
      first_failure += r.argument ? r.argument->text
                                  : std::string(error_name(r.error.value_or(
                                        ErrorCode::kExtractionFailed)));
    }
  }
  const double ms = millis_since(start);
  detail << passed << "/" << testing::kGoldenCases.size() << " in " << ms << " ms";
  if (!first_failure.empty()) detail << "; first failure " << first_failure;
  return passed == static_cast<int>(testing::kGoldenCases.size()) && ms < 1000;
}

bool table2(std::ostream &detail) {
  // The published figures must be self-consistent under our portion rule.
  const std::vector<StatsDiff> self =
      compare_stats(stats_from_counts(kTable2Counts), kTable2Counts, kTable2Percent);
  const LoadResult loaded = load_corpus_file(dataset_path(), CorpusFormat::kAuto);
  const CorpusStats actual = corpus_stats(loaded.entries);
  std::vector<StatsDiff> diffs;
  if (using_fixture()) {
    const std::array<std::size_t, 6> counts = {10, 10, 10, 10, 10, 10};
    std::array<double, 6> percents;
    percents.fill(100.0 / 3.0);
    diffs = compare_stats(actual, counts, percents);
    detail << "fixture (SAEK_DATASET unset), ";
  } else {
    diffs = compare_stats(actual, kTable2Counts, kTable2Percent);
    detail << dataset_path() << ", ";
  }
  detail << actual.total << " rows, " << loaded.errors.size() << " load errors, "
         << diffs.size() << " diffs, published table self-check " << self.size()
         << " diffs";
  return self.empty() && diffs.empty() && loaded.errors.empty();
}

bool properties(std::ostream &detail) {
  const Lexicon &lexicon = Lexicon::builtin();
  const Engine engine(lexicon);
  testing::UtteranceFuzzer fuzz(1234);
  int classified = 0, extracted = 0, violations = 0, arbitrary = 0;
  std::string first;
  try {
    while (classified < 1000) {
      const std::string line = fuzz.next();
      const Result r = engine.extract(line);
      if (r.classification) ++classified;
      if (!r.argument) continue;
      ++extracted;
      for (const std::string &v : {testing::suffix_violation(lexicon, *r.argument),
                                   testing::ending_violation(lexicon, *r.argument)}) {
        if (v.empty()) continue;
        ++violations;
        if (first.empty()) first = line + ": " + v;
      }
    }
    for (int i = 0; i < 1000; ++i) {
      engine.extract(fuzz.bytes());
      engine.extract(fuzz.unicode());
      arbitrary += 2;
    }
  } catch (const std::exception &e) {
    detail << "aborted: " << e.what();
    return false;
  }
  detail << classified << " classified, " << extracted << " extracted, "
         << violations << " violations, " << arbitrary << " arbitrary inputs survived";
  if (!first.empty()) detail << "; first " << first;
  return violations == 0;
}

bool jamo_round_trip(std::ostream &detail) {
  const auto start = Clock::now();
  int identical = 0;
  for (char32_t ch = hangul::kFirstSyllable; ch <= hangul::kLastSyllable; ++ch) {
    if (hangul::compose(hangul::decompose(ch)) == ch) ++identical;
  }
  const double ms = millis_since(start);
  detail << identical << "/" << hangul::kSyllableCount << " in " << ms << " ms";
  return identical == 11172 && ms < 100;
}

bool fleiss(std::ostream &detail) {
  const double perfect =
      fleiss_kappa(AnnotationMatrix({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {3, 0, 0}}));
  // Two raters split on every item: P-bar 0, P-e 0.5.
  const double split = fleiss_kappa(AnnotationMatrix({{1, 1}, {1, 1}}));
  detail << "perfect " << perfect << ", split " << split;
  return std::fabs(perfect - 1.0) <= 1e-12 && std::fabs(split + 1.0) <= 1e-12;
}

bool coverage(std::ostream &detail) {
  const Engine engine(Lexicon::builtin());
  const LoadResult loaded = load_corpus_file(dataset_path(), CorpusFormat::kAuto);
  std::vector<Prediction> predictions;
  std::size_t untyped = 0;
  for (const CorpusEntry &e : loaded.entries) {
    const Result r = engine.classify(e.utterance);
    Prediction p;
    if (r.classification) {
      p.label = r.classification->label;
    } else if (r.error != ErrorCode::kUnclassifiable) {
      ++untyped;
    }
    predictions.push_back(p);
  }
  const EvalReport report = evaluate(predictions, loaded.entries);
  detail << (using_fixture() ? "fixture" : dataset_path()) << ", coverage "
         << report.coverage << ", accuracy " << report.label_accuracy
         << ", failures not typed unclassifiable " << untyped;
  return report.rows > 0 && report.coverage >= 0.9 && untyped == 0;
}

}  // namespace
}  // namespace saek

int main() {
  using Check = std::function<bool(std::ostream &)>;
  const std::pair<const char *, Check> checks[] = {
      {"golden_pairs", saek::golden_pairs},
      {"table2_stats", saek::table2},
      {"argument_properties", saek::properties},
      {"jamo_round_trip", saek::jamo_round_trip},
      {"fleiss_kappa", saek::fleiss},
      {"classification_coverage", saek::coverage},
  };
  int failed = 0;
  for (const auto &[name, check] : checks) {
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = check(detail);
    } catch (const std::exception &e) {
      detail << "exception: " << e.what();
    }
    std::cout << (ok ? "PASS " : "FAIL ") << name << ": " << detail.str() << '\n';
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
