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

#include "saek/corpus.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include "saek/error.h"
#include "saek/text.h"

namespace saek {

namespace {

// Sentence-final punctuation that dataset utterances never carry.
constexpr std::u32string_view kFinalPunctuation = U".?!…？！。";

std::optional<IntentLabel> parse_label(std::string_view field) {
  int value = -1;
  const char *end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return label_from_int(value);
}

// "밖에 나가지 않기 (금지)" -> text and tag.
void split_category(CorpusEntry &entry) {
  std::string &arg = *entry.gold_argument;
  if (arg.empty() || arg.back() != ')') return;
  const std::size_t open = arg.rfind('(');
  if (open == std::string::npos) return;
  auto category = category_from_tag(
      std::string_view(arg).substr(open + 1, arg.size() - open - 2));
  if (!category) return;
  entry.gold_category = category;
  arg.erase(open);
  while (!arg.empty() && arg.back() == ' ') arg.pop_back();
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = line.find('\t', pos);
    fields.push_back(line.substr(pos, next - pos));
    if (next == std::string_view::npos) return fields;
    pos = next + 1;
  }
}

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::map<std::u32string, int> bigrams(std::string_view text) {
  std::u32string s = to_u32(normalize_argument(text));
  std::erase(s, U' ');
  std::map<std::u32string, int> out;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) ++out[s.substr(i, 2)];
  return out;
}

}  // namespace

LoadResult load_corpus(std::istream &in, CorpusFormat format) {
  if (!in.good()) throw Error(ErrorCode::kIoFailure, "corpus stream is not readable");
  LoadResult result;
  std::string line;
  std::size_t line_no = 0;
  auto reject = [&](std::string message) {
    result.errors.push_back({line_no, std::move(message)});
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const std::vector<std::string_view> fields = split_tabs(line);
    const std::size_t want = format == CorpusFormat::kLabeled  ? 2
                             : format == CorpusFormat::kPaired ? 3
                                                               : 0;
    if ((want != 0 && fields.size() != want) ||
        (want == 0 && fields.size() != 2 && fields.size() != 3)) {
      reject("expected " + std::string(want == 3 ? "3" : want == 2 ? "2" : "2 or 3") +
             " tab-separated columns, found " + std::to_string(fields.size()));
      continue;
    }
    CorpusEntry entry;
    entry.line_no = line_no;
    const std::optional<IntentLabel> label = parse_label(fields[0]);
    if (!label) {
      reject("label out of range: '" + std::string(fields[0]) + "'");
      continue;
    }
    entry.label = *label;
    entry.utterance = to_utf8(collapse_whitespace(to_u32(fields[1])));
    if (entry.utterance.empty()) {
      reject("empty utterance");
      continue;
    }
    const std::u32string text = to_u32(entry.utterance);
    if (text.find_first_of(kFinalPunctuation) != std::u32string::npos) {
      reject("utterance contains sentence-final punctuation");
      continue;
    }
    if (fields.size() == 3) {
      entry.gold_argument = std::string(fields[2]);
      split_category(entry);
      if (entry.gold_argument->empty()) {
        reject("empty gold argument");
        continue;
      }
    }
    result.entries.push_back(std::move(entry));
  }
  if (in.bad()) throw Error(ErrorCode::kIoFailure, "read error in corpus stream");
  return result;
}

LoadResult load_corpus_file(const std::string &path, CorpusFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open corpus file: " + path);
  return load_corpus(in, format);
}

void serialize_corpus(std::ostream &out, std::span<const CorpusEntry> entries,
                      CorpusFormat format) {
  for (const CorpusEntry &e : entries) {
    out << to_int(e.label) << '\t' << e.utterance;
    const bool paired = format == CorpusFormat::kPaired ||
                        (format == CorpusFormat::kAuto && e.gold_argument);
    if (paired) {
      out << '\t' << e.gold_argument.value_or("");
      if (e.gold_category) out << " (" << category_tag(*e.gold_category) << ')';
    }
    out << '\n';
  }
}

CorpusStats stats_from_counts(const std::array<std::size_t, 6> &counts) {
  CorpusStats s;
  s.counts = counts;
  for (IntentLabel label : kAllLabels) {
    const std::size_t c = counts[static_cast<std::size_t>(to_int(label))];
    s.total += c;
    (is_question(label) ? s.questions : s.commands) += c;
  }
  for (IntentLabel label : kAllLabels) {
    const auto i = static_cast<std::size_t>(to_int(label));
    s.portions[i] = ratio(counts[i], s.total);
    s.type_portions[i] =
        ratio(counts[i], is_question(label) ? s.questions : s.commands);
  }
  return s;
}

CorpusStats corpus_stats(std::span<const CorpusEntry> entries) {
  if (entries.empty()) throw Error(ErrorCode::kEmptyCorpus, "corpus has no entries");
  std::array<std::size_t, 6> counts{};
  for (const CorpusEntry &e : entries) {
    ++counts[static_cast<std::size_t>(to_int(e.label))];
  }
  return stats_from_counts(counts);
}

std::vector<StatsDiff> compare_stats(const CorpusStats &actual,
                                     const std::array<std::size_t, 6> &counts,
                                     const std::array<double, 6> &percents,
                                     double tolerance_pp) {
  std::vector<StatsDiff> diffs;
  std::size_t total = 0;
  for (IntentLabel label : kAllLabels) {
    const auto i = static_cast<std::size_t>(to_int(label));
    total += counts[i];
    if (actual.counts[i] != counts[i]) {
      diffs.push_back({"count", label, static_cast<double>(counts[i]),
                       static_cast<double>(actual.counts[i])});
    }
    const double pct = 100.0 * actual.type_portions[i];
    if (std::fabs(pct - percents[i]) > tolerance_pp + 1e-9) {
      diffs.push_back({"percent", label, percents[i], pct});
    }
  }
  if (actual.total != total) {
    diffs.push_back({"total", std::nullopt, static_cast<double>(total),
                     static_cast<double>(actual.total)});
  }
  return diffs;
}

std::string normalize_argument(std::string_view text) {
  return to_utf8(collapse_whitespace(nfc(to_u32(text))));
}

double char_bigram_f1(std::string_view predicted, std::string_view gold) {
  std::u32string p = to_u32(normalize_argument(predicted));
  std::u32string g = to_u32(normalize_argument(gold));
  std::erase(p, U' ');
  std::erase(g, U' ');
  if (p.size() < 2 || g.size() < 2) return p == g ? 1.0 : 0.0;
  const std::map<std::u32string, int> pb = bigrams(predicted);
  const std::map<std::u32string, int> gb = bigrams(gold);
  int overlap = 0;
  for (const auto &[gram, count] : pb) {
    auto it = gb.find(gram);
    if (it != gb.end()) overlap += std::min(count, it->second);
  }
  if (overlap == 0) return 0.0;
  const double precision = static_cast<double>(overlap) / static_cast<double>(p.size() - 1);
  const double recall = static_cast<double>(overlap) / static_cast<double>(g.size() - 1);
  return 2 * precision * recall / (precision + recall);
}

EvalReport evaluate(std::span<const Prediction> predictions,
                    std::span<const CorpusEntry> gold) {
  if (predictions.size() != gold.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "predictions: " + std::to_string(predictions.size()) +
                    ", gold: " + std::to_string(gold.size()));
  }
  EvalReport r;
  r.rows = gold.size();
  std::size_t correct = 0;
  std::size_t exact = 0;
  double f1_sum = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const Prediction &p = predictions[i];
    const CorpusEntry &g = gold[i];
    ClassMetrics &gm = r.per_class[static_cast<std::size_t>(to_int(g.label))];
    ++gm.support;
    if (p.label) {
      ++r.covered;
      ClassMetrics &pm = r.per_class[static_cast<std::size_t>(to_int(*p.label))];
      ++pm.predicted;
      if (*p.label == g.label) {
        ++correct;
        ++pm.true_positive;
      }
    }
    if (g.gold_argument) {
      ++r.argument_rows;
      if (p.argument) {
        if (normalize_argument(*p.argument) == normalize_argument(*g.gold_argument)) {
          ++exact;
        }
        f1_sum += char_bigram_f1(*p.argument, *g.gold_argument);
      }
    }
  }
  r.label_accuracy = ratio(correct, r.rows);
  r.coverage = ratio(r.covered, r.rows);
  std::size_t present = 0;
  double macro = 0;
  for (ClassMetrics &m : r.per_class) {
    m.precision = ratio(m.true_positive, m.predicted);
    m.recall = ratio(m.true_positive, m.support);
    m.f1 = m.precision + m.recall == 0
               ? 0.0
               : 2 * m.precision * m.recall / (m.precision + m.recall);
    if (m.support > 0 || m.predicted > 0) {
      ++present;
      macro += m.f1;
    }
  }
  r.macro_f1 = present == 0 ? 0.0 : macro / static_cast<double>(present);
  r.arg_exact = ratio(exact, r.argument_rows);
  r.arg_char_f1 = r.argument_rows == 0 ? 0.0 : f1_sum / static_cast<double>(r.argument_rows);
  return r;
}

AnnotationMatrix::AnnotationMatrix(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty()) throw Error(ErrorCode::kInvalidMatrix, "matrix has no items");
  const std::size_t k = rows_.front().size();
  if (k == 0) throw Error(ErrorCode::kInvalidMatrix, "matrix has no categories");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::vector<int> &row = rows_[i];
    if (row.size() != k) {
      throw Error(ErrorCode::kInvalidMatrix,
                  "row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                      " categories, expected " + std::to_string(k));
    }
    int sum = 0;
    for (int cell : row) {
      if (cell < 0) {
        throw Error(ErrorCode::kInvalidMatrix, "negative count in row " + std::to_string(i));
      }
      sum += cell;
    }
    if (i == 0) raters_ = sum;
    if (sum != raters_) {
      throw Error(ErrorCode::kInvalidMatrix,
                  "row " + std::to_string(i) + " sums to " + std::to_string(sum) +
                      ", expected " + std::to_string(raters_));
    }
  }
  if (raters_ < 2) {
    throw Error(ErrorCode::kInvalidMatrix, "need at least two raters per item");
  }
}

double fleiss_kappa(const AnnotationMatrix &m) {
  const double n = m.raters();
  const double items = static_cast<double>(m.items());
  std::vector<double> column(m.categories(), 0.0);
  double p_bar = 0;
  for (const std::vector<int> &row : m.rows()) {
    double agree = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      agree += static_cast<double>(row[j]) * (row[j] - 1);
      column[j] += row[j];
    }
    p_bar += agree / (n * (n - 1));
  }
  p_bar /= items;
  double p_e = 0;
  for (double c : column) {
    const double p = c / (items * n);
    p_e += p * p;
  }
  if (std::fabs(1.0 - p_e) < 1e-15) {
    throw Error(ErrorCode::kDegenerateMatrix,
                "all ratings fall in one category; chance agreement is 1");
  }
  return (p_bar - p_e) / (1.0 - p_e);
}

}  // namespace saek
