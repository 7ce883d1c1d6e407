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

#include "saek/engine.h"

#include <algorithm>

namespace saek {

Result Engine::classify(std::string_view line) const { return run(line, false); }

Result Engine::extract(std::string_view line) const { return run(line, true); }

Result Engine::run(std::string_view line, bool with_argument) const {
  Result r;
  r.text = std::string(line);
  try {
    const NormalizedUtterance u = analyzer_.normalize(line);
    r.text = u.utf8();
    r.classification = classifier_.classify(u);
    if (with_argument) {
      r.argument = extractor_.extract(u, *r.classification);
      for (const std::string &note : r.argument->notes) {
        r.classification->evidence.push_back({note, 0, u.text.size()});
      }
    }
  } catch (const Error &e) {
    r.error = e.code();
    r.error_message = e.what();
  }
  return r;
}

nlohmann::json to_json(const Result &r) {
  nlohmann::json j;
  j["text"] = r.text;
  if (r.classification) {
    const Classification &c = *r.classification;
    j["label"] = to_int(c.label);
    j["label_name"] = label_name(c.label);
    if (is_question(c.label)) {
      j["question_type"] = question_type_name(question_type(c.label));
    } else {
      j["negativeness"] = negativeness_name(negativeness(c.label));
    }
    if (c.wh) j["wh"] = wh_kind_name(c.wh->kind);
    nlohmann::json evidence = nlohmann::json::array();
    for (const Evidence &e : c.evidence) {
      evidence.push_back({{"rule", e.rule}, {"begin", e.begin}, {"end", e.end}});
    }
    j["evidence"] = std::move(evidence);
  }
  if (r.argument) {
    j["argument"] = r.argument->text;
    j["category"] = category_tag(r.argument->category);
    if (r.argument->quantified_object) j["quantified_object"] = true;
  }
  if (r.error) {
    j["error"] = error_name(*r.error);
    j["message"] = r.error_message;
  }
  return j;
}

std::string to_tsv(const Result &r) {
  std::string label, name, qtype, neg, argument, category, error;
  if (r.classification) {
    const IntentLabel l = r.classification->label;
    label = std::to_string(to_int(l));
    name = label_name(l);
    if (is_question(l)) {
      qtype = question_type_name(question_type(l));
    } else {
      neg = negativeness_name(negativeness(l));
    }
  }
  if (r.argument) {
    argument = r.argument->text;
    category = category_tag(r.argument->category);
  }
  if (r.error) error = error_name(*r.error);
  std::string out = r.text;
  std::replace(out.begin(), out.end(), '\t', ' ');
  for (const std::string *cell : {&label, &name, &qtype, &neg, &argument, &category, &error}) {
    out += '\t';
    out += *cell;
  }
  return out;
}

}  // namespace saek
