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

#ifndef SAEK_CORPUS_H_
#define SAEK_CORPUS_H_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "saek/classify.h"
#include "saek/lexicon.h"

namespace saek {

// Row layouts of the dataset TSV. kAuto accepts both per line.
enum class CorpusFormat {
  kLabeled,  // label<TAB>utterance
  kPaired,   // label<TAB>utterance<TAB>argument
  kAuto,
};

struct CorpusEntry {
  IntentLabel label = IntentLabel::kYesNo;
  std::string utterance;
  std::optional<std::string> gold_argument;
  // Split off a trailing "(요구)"-style tag of the gold argument.
  std::optional<ArgumentCategory> gold_category;
  std::size_t line_no = 0;

  bool operator==(const CorpusEntry &) const = default;
};

struct LoadError {
  std::size_t line_no = 0;
  std::string message;
};

struct LoadResult {
  std::vector<CorpusEntry> entries;
  std::vector<LoadError> errors;
};

// Reads rows until end of stream. Bad rows become LoadErrors; blank lines
// are skipped. Throws Error(kIoFailure) when the stream is unusable.
LoadResult load_corpus(std::istream &in, CorpusFormat format);
LoadResult load_corpus_file(const std::string &path, CorpusFormat format);

// Writes rows in the given layout (kAuto: paired when a gold argument
// exists). Loading the output yields the same entries, up to line numbers.
void serialize_corpus(std::ostream &out, std::span<const CorpusEntry> entries,
                      CorpusFormat format);

struct CorpusStats {
  std::array<std::size_t, 6> counts{};
  std::size_t total = 0;
  std::size_t questions = 0;
  std::size_t commands = 0;
  // Fraction of all entries.
  std::array<double, 6> portions{};
  // Fraction of the entry's super-type (questions 0-2, commands 3-5), the
  // percentages published with the dataset.
  std::array<double, 6> type_portions{};
};

// Throws Error(kEmptyCorpus) on no entries.
CorpusStats corpus_stats(std::span<const CorpusEntry> entries);
CorpusStats stats_from_counts(const std::array<std::size_t, 6> &counts);

// Published counts and within-type percentages.
inline constexpr std::array<std::size_t, 6> kTable2Counts = {
    5718, 227, 11924, 477, 12369, 122};
inline constexpr std::size_t kTable2Total = 30837;
inline constexpr std::array<double, 6> kTable2Percent = {
    31.99, 1.27, 66.73, 3.67, 95.38, 0.94};

struct StatsDiff {
  std::string field;  // "count", "percent" or "total"
  std::optional<IntentLabel> label;
  double expected = 0;
  double actual = 0;
};

// Exact count match and |percent difference| <= tolerance_pp per label.
std::vector<StatsDiff> compare_stats(const CorpusStats &actual,
                                     const std::array<std::size_t, 6> &counts,
                                     const std::array<double, 6> &percents,
                                     double tolerance_pp = 0.01);

struct Prediction {
  std::optional<IntentLabel> label;  // empty when unclassifiable
  std::optional<std::string> argument;
};

struct ClassMetrics {
  std::size_t support = 0;    // gold rows
  std::size_t predicted = 0;  // predicted rows
  std::size_t true_positive = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};

struct EvalReport {
  std::size_t rows = 0;
  std::size_t covered = 0;  // rows with a predicted label
  double label_accuracy = 0;
  double coverage = 0;
  std::array<ClassMetrics, 6> per_class{};
  // Mean F1 over labels occurring in gold or predictions.
  double macro_f1 = 0;
  std::size_t argument_rows = 0;  // rows with a gold argument
  double arg_exact = 0;
  double arg_char_f1 = 0;
};

// NFC and single-spaced.
std::string normalize_argument(std::string_view text);

// F1 over multisets of character bigrams, spaces removed. Strings of one
// character compare by equality.
double char_bigram_f1(std::string_view predicted, std::string_view gold);

// Throws Error(kLengthMismatch) when the spans differ in length.
EvalReport evaluate(std::span<const Prediction> predictions,
                    std::span<const CorpusEntry> gold);

// items x categories matrix of rater counts.
class AnnotationMatrix {
 public:
  // Throws Error(kInvalidMatrix) unless every row has the same number of
  // non-negative cells summing to the same n >= 2.
  explicit AnnotationMatrix(std::vector<std::vector<int>> rows);

  std::size_t items() const { return rows_.size(); }
  std::size_t categories() const { return rows_.front().size(); }
  int raters() const { return raters_; }
  const std::vector<std::vector<int>> &rows() const { return rows_; }

 private:
  std::vector<std::vector<int>> rows_;
  int raters_ = 0;
};

// Throws Error(kDegenerateMatrix) when chance agreement is 1.
double fleiss_kappa(const AnnotationMatrix &m);

}  // namespace saek

#endif  // SAEK_CORPUS_H_
