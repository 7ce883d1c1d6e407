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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "saek/corpus.h"
#include "saek/engine.h"
#include "saek/error.h"

namespace saek {

namespace {

using nlohmann::json;

constexpr char kFooter[] =
    "Records are JSON lines by default. With --format tsv, classify and\n"
    "extract write the columns\n"
    "  text label label_name question_type negativeness argument category error\n"
    "and corpus stats writes\n"
    "  label label_name count portion type_percent\n"
    "Corpus files are label<TAB>utterance[<TAB>argument], UTF-8, no header.";

std::string dump(const json &j) {
  return j.dump(-1, ' ', false, json::error_handler_t::replace);
}

double round_to(double value, int digits) {
  const double scale = std::pow(10.0, digits);
  return std::round(value * scale) / scale;
}

CorpusFormat parse_corpus_format(const std::string &name) {
  if (name == "labeled") return CorpusFormat::kLabeled;
  if (name == "paired") return CorpusFormat::kPaired;
  return CorpusFormat::kAuto;
}

struct Options {
  std::string format = "json";
  bool strict = false;
  std::string lexicon_path;
  std::string input;
  std::string corpus_format = "auto";
  bool expect_table2 = false;
  std::vector<std::size_t> expect_counts;
  std::vector<double> expect_percents;
  std::string predictions;
  std::string failures;
};

int run_utterances(const Engine &engine, const Options &opt, bool extract,
                   std::istream &in, std::ostream &out, std::ostream &err) {
  std::ifstream file;
  std::istream *source = &in;
  if (!opt.input.empty() && opt.input != "-") {
    file.open(opt.input, std::ios::binary);
    if (!file) {
      err << "saek: cannot open " << opt.input << '\n';
      return 2;
    }
    source = &file;
  }
  std::size_t failed = 0;
  std::string line;
  while (std::getline(*source, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const Result r = extract ? engine.extract(line) : engine.classify(line);
    if (r.error) ++failed;
    if (opt.format == "tsv") {
      out << to_tsv(r) << '\n';
    } else {
      out << dump(to_json(r)) << '\n';
    }
  }
  if (failed > 0) err << "saek: " << failed << " line(s) failed\n";
  return opt.strict && failed > 0 ? 1 : 0;
}

LoadResult load_reporting(const Options &opt, std::ostream &err) {
  LoadResult loaded =
      load_corpus_file(opt.input, parse_corpus_format(opt.corpus_format));
  for (const LoadError &e : loaded.errors) {
    err << opt.input << ':' << e.line_no << ": " << e.message << '\n';
  }
  return loaded;
}

int run_stats(const Options &opt, std::ostream &out, std::ostream &err) {
  const LoadResult loaded = load_reporting(opt, err);
  const CorpusStats s = corpus_stats(loaded.entries);

  std::optional<std::array<std::size_t, 6>> counts;
  std::array<double, 6> percents{};
  if (opt.expect_table2) {
    counts = kTable2Counts;
    percents = kTable2Percent;
  } else if (!opt.expect_counts.empty()) {
    if (opt.expect_counts.size() != 6) {
      err << "saek: --expect-counts takes six values\n";
      return 2;
    }
    counts.emplace();
    std::copy(opt.expect_counts.begin(), opt.expect_counts.end(), counts->begin());
    if (opt.expect_percents.empty()) {
      const CorpusStats expected = stats_from_counts(*counts);
      for (std::size_t i = 0; i < 6; ++i) {
        percents[i] = 100.0 * expected.type_portions[i];
      }
    } else if (opt.expect_percents.size() == 6) {
      std::copy(opt.expect_percents.begin(), opt.expect_percents.end(), percents.begin());
    } else {
      err << "saek: --expect-percents takes six values\n";
      return 2;
    }
  }
  std::vector<StatsDiff> diffs;
  if (counts) diffs = compare_stats(s, *counts, percents);

  if (opt.format == "tsv") {
    for (IntentLabel label : kAllLabels) {
      const auto i = static_cast<std::size_t>(to_int(label));
      out << to_int(label) << '\t' << label_name(label) << '\t' << s.counts[i]
          << '\t' << round_to(s.portions[i], 4) << '\t'
          << round_to(100.0 * s.type_portions[i], 4) << '\n';
    }
  } else {
    json j;
    j["total"] = s.total;
    j["questions"] = s.questions;
    j["commands"] = s.commands;
    j["load_errors"] = loaded.errors.size();
    json labels = json::array();
    for (IntentLabel label : kAllLabels) {
      const auto i = static_cast<std::size_t>(to_int(label));
      labels.push_back({{"label", to_int(label)},
                        {"label_name", label_name(label)},
                        {"count", s.counts[i]},
                        {"portion", round_to(s.portions[i], 4)},
                        {"type_percent", round_to(100.0 * s.type_portions[i], 4)}});
    }
    j["labels"] = std::move(labels);
    if (counts) {
      json list = json::array();
      for (const StatsDiff &d : diffs) {
        json item = {{"field", d.field}, {"expected", d.expected}, {"actual", d.actual}};
        if (d.label) item["label"] = to_int(*d.label);
        list.push_back(std::move(item));
      }
      j["diffs"] = std::move(list);
    }
    out << dump(j) << '\n';
  }
  for (const StatsDiff &d : diffs) {
    err << "saek: " << d.field;
    if (d.label) err << " of label " << to_int(*d.label);
    err << ": expected " << d.expected << ", got " << d.actual << '\n';
  }
  return diffs.empty() ? 0 : 1;
}

int run_validate(const Options &opt, std::ostream &out) {
  const LoadResult loaded =
      load_corpus_file(opt.input, parse_corpus_format(opt.corpus_format));
  for (const LoadError &e : loaded.errors) {
    out << dump({{"line", e.line_no}, {"error", e.message}}) << '\n';
  }
  return loaded.errors.empty() ? 0 : 1;
}

std::vector<Prediction> read_predictions(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open predictions: " + path);
  std::vector<Prediction> predictions;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line, nullptr, false);
    Prediction p;
    if (j.is_object()) {
      if (j.contains("label") && j["label"].is_number_integer()) {
        p.label = label_from_int(j["label"].get<int>());
      }
      if (j.contains("argument") && j["argument"].is_string()) {
        p.argument = j["argument"].get<std::string>();
      }
    }
    predictions.push_back(std::move(p));
  }
  return predictions;
}

int run_eval(const Engine &engine, const Options &opt, std::ostream &out,
             std::ostream &err) {
  const LoadResult loaded = load_reporting(opt, err);
  std::vector<Prediction> predictions;
  std::unique_ptr<std::ofstream> failures;
  if (!opt.failures.empty()) {
    failures = std::make_unique<std::ofstream>(opt.failures, std::ios::binary);
    if (!*failures) {
      err << "saek: cannot write " << opt.failures << '\n';
      return 2;
    }
  }
  if (!opt.predictions.empty()) {
    predictions = read_predictions(opt.predictions);
  } else {
    predictions.reserve(loaded.entries.size());
    for (const CorpusEntry &e : loaded.entries) {
      const Result r = engine.extract(e.utterance);
      Prediction p;
      if (r.classification) p.label = r.classification->label;
      if (r.argument) p.argument = r.argument->text;
      if (failures && (r.error || p.label != e.label)) {
        json record = to_json(r);
        record["line"] = e.line_no;
        record["gold_label"] = to_int(e.label);
        *failures << dump(record) << '\n';
      }
      predictions.push_back(std::move(p));
    }
  }
  const EvalReport report = evaluate(predictions, loaded.entries);

  json j;
  j["rows"] = report.rows;
  j["covered"] = report.covered;
  j["coverage"] = report.coverage;
  j["label_accuracy"] = report.label_accuracy;
  j["macro_f1"] = report.macro_f1;
  json per_class = json::array();
  for (IntentLabel label : kAllLabels) {
    const ClassMetrics &m = report.per_class[static_cast<std::size_t>(to_int(label))];
    per_class.push_back({{"label", to_int(label)},
                         {"label_name", label_name(label)},
                         {"support", m.support},
                         {"predicted", m.predicted},
                         {"precision", m.precision},
                         {"recall", m.recall},
                         {"f1", m.f1}});
  }
  j["per_class"] = std::move(per_class);
  j["argument_rows"] = report.argument_rows;
  j["arg_exact"] = report.arg_exact;
  j["arg_char_f1"] = report.arg_char_f1;
  out << dump(j) << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::istream &in,
            std::ostream &out, std::ostream &err) {
  Options opt;
  CLI::App app{"Intent classification and argument extraction for Korean "
               "questions and commands.",
               "saek"};
  app.footer(kFooter);
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "tsv"}));
  app.add_flag("--strict", opt.strict, "Exit 1 when any line fails");
  app.add_option("--lexicon", opt.lexicon_path, "Lexicon file replacing the built-in tables")
      ->envname("SAEK_LEXICON");

  CLI::App *classify = app.add_subcommand("classify", "Label each input line");
  classify->add_option("file", opt.input, "Utterances, one per line (default stdin)");
  CLI::App *extract = app.add_subcommand("extract", "Label each line and extract its argument");
  extract->add_option("file", opt.input, "Utterances, one per line (default stdin)");

  CLI::App *corpus = app.add_subcommand("corpus", "Dataset tools");
  corpus->require_subcommand(1);
  CLI::App *stats = corpus->add_subcommand("stats", "Per-label counts and portions");
  stats->add_option("file", opt.input, "Corpus TSV")->required();
  stats->add_option("--corpus-format", opt.corpus_format, "labeled, paired or auto")
      ->check(CLI::IsMember({"labeled", "paired", "auto"}));
  stats->add_flag("--expect-table2", opt.expect_table2,
                  "Compare against the published dataset counts");
  stats->add_option("--expect-counts", opt.expect_counts,
                    "Compare against six label counts")
      ->delimiter(',');
  stats->add_option("--expect-percents", opt.expect_percents,
                    "Within-type percentages for --expect-counts")
      ->delimiter(',');
  CLI::App *validate = corpus->add_subcommand("validate", "Report malformed rows as JSON lines");
  validate->add_option("file", opt.input, "Corpus TSV")->required();
  validate->add_option("--corpus-format", opt.corpus_format, "labeled, paired or auto")
      ->check(CLI::IsMember({"labeled", "paired", "auto"}));

  CLI::App *eval = app.add_subcommand("eval", "Score predictions against a gold corpus");
  eval->add_option("gold", opt.input, "Gold corpus TSV")->required();
  eval->add_option("--predictions", opt.predictions,
                   "JSON lines from extract (default: run the engine)");
  eval->add_option("--failures", opt.failures,
                   "Write records of failed or mislabeled rows here");
  eval->add_option("--corpus-format", opt.corpus_format, "labeled, paired or auto")
      ->check(CLI::IsMember({"labeled", "paired", "auto"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "saek: " << e.what() << '\n';
    err << "Run 'saek --help' for usage.\n";
    return 2;
  }

  try {
    std::optional<Lexicon> loaded;
    if (!opt.lexicon_path.empty()) loaded = Lexicon::load_file(opt.lexicon_path);
    const Lexicon &lexicon = loaded ? *loaded : Lexicon::builtin();
    const Engine engine(lexicon);

    if (classify->parsed()) return run_utterances(engine, opt, false, in, out, err);
    if (extract->parsed()) return run_utterances(engine, opt, true, in, out, err);
    if (stats->parsed()) return run_stats(opt, out, err);
    if (validate->parsed()) return run_validate(opt, out);
    if (eval->parsed()) return run_eval(engine, opt, out, err);
  } catch (const Error &e) {
    err << "saek: " << error_name(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::kLexiconFormat ? 2 : 1;
  }
  return 2;
}

}  // namespace saek
