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

#include "saek/classify.h"

#include <gtest/gtest.h>

#include "golden.h"
#include "saek/error.h"

namespace saek {
namespace {

class ClassifyTest : public ::testing::Test {
 protected:
  ClassifyTest() : analyzer_(Lexicon::builtin()), classifier_(Lexicon::builtin()) {}

  Classification run(std::string_view s) const {
    return classifier_.classify(analyzer_.normalize(s));
  }
  bool has_rule(const Classification &c, std::string_view rule) const {
    for (const Evidence &e : c.evidence) {
      if (e.rule == rule) return true;
    }
    return false;
  }

  Analyzer analyzer_;
  Classifier classifier_;
};

TEST_F(ClassifyTest, GoldenLabels) {
  for (const testing::GoldenCase &g : testing::kGoldenCases) {
    EXPECT_EQ(run(g.utterance).label, g.label) << g.id;
  }
}

TEST_F(ClassifyTest, LabelEncoding) {
  EXPECT_EQ(to_int(IntentLabel::kYesNo), 0);
  EXPECT_EQ(to_int(IntentLabel::kStrongRequirement), 5);
  EXPECT_EQ(label_name(IntentLabel::kWh), "wh_question");
  EXPECT_EQ(label_name(IntentLabel::kStrongRequirement), "strong_requirement");
  EXPECT_EQ(label_from_int(3), IntentLabel::kProhibition);
  EXPECT_FALSE(label_from_int(6).has_value());
  EXPECT_FALSE(label_from_int(-1).has_value());
  for (IntentLabel l : kAllLabels) EXPECT_EQ(label_from_int(to_int(l)), l);
}

TEST_F(ClassifyTest, SuperTypes) {
  EXPECT_EQ(question_type(IntentLabel::kAlternative), QuestionType::kAlternative);
  EXPECT_EQ(negativeness(IntentLabel::kStrongRequirement), Negativeness::kStrongRequirement);
  EXPECT_EQ(negativeness_name(Negativeness::kProhibition), "PH");
  try {
    question_type(IntentLabel::kRequirement);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongSuperType);
  }
  try {
    negativeness(IntentLabel::kYesNo);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kWrongSuperType);
  }
}

TEST_F(ClassifyTest, Unclassifiable) {
  try {
    run("비가 온다");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnclassifiable);
  }
}

TEST_F(ClassifyTest, DoubleNegationIsStrongRequirement) {
  const Classification c = run("안전띠 안매면 큰일나");
  EXPECT_TRUE(has_rule(c, "double_negation"));
  // Without the inner 안 the same frame is a prohibition.
  const Classification p = run("늦게 오면 큰일나");
  EXPECT_EQ(p.label, IntentLabel::kProhibition);
  EXPECT_TRUE(has_rule(p, "conditional_danger"));
}

TEST_F(ClassifyTest, InfoSeekingImperatives) {
  const Classification q = run("이번 주 일정을 모두 말해");
  EXPECT_TRUE(has_rule(q, "info_seeking"));
  EXPECT_TRUE(has_rule(q, "quantified_object"));
  EXPECT_EQ(run("회의 일정 알려줘").label, IntentLabel::kYesNo);
  const Classification w = run("회의 언제인지 알려줘");
  EXPECT_EQ(w.label, IntentLabel::kWh);
  ASSERT_TRUE(w.wh);
  EXPECT_EQ(w.wh->kind, WhKind::kWhen);
}

TEST_F(ClassifyTest, WhEvidenceOffsets) {
  const NormalizedUtterance u = analyzer_.normalize("오늘은 누구 왔니");
  const Classification c = classifier_.classify(u);
  ASSERT_TRUE(c.wh);
  EXPECT_EQ(c.wh->kind, WhKind::kWho);
  EXPECT_EQ(c.wh->primary_noun(), U"사람");
  bool found = false;
  for (const Evidence &e : c.evidence) {
    if (e.rule != "wh_word") continue;
    found = true;
    EXPECT_EQ(u.text.substr(e.begin, e.end - e.begin), U"누구");
  }
  EXPECT_TRUE(found);
}

TEST_F(ClassifyTest, MultiTokenWhEvidence) {
  const NormalizedUtterance u = analyzer_.normalize("대구 몇 시에 도착이야");
  const Classification c = classifier_.classify(u);
  for (const Evidence &e : c.evidence) {
    if (e.rule == "wh_word") EXPECT_EQ(u.text.substr(e.begin, e.end - e.begin), U"몇 시에");
  }
}

TEST_F(ClassifyTest, FirstWhWordDecides) {
  const Classification c = run("누가 어디 갔어");
  ASSERT_TRUE(c.wh);
  EXPECT_EQ(c.wh->kind, WhKind::kWho);
}

TEST_F(ClassifyTest, Alternatives) {
  EXPECT_TRUE(has_rule(run("커피 마실래 아니면 차 마실래"), "disjunction"));
  EXPECT_TRUE(has_rule(run("짜장 먹을래 짬뽕 먹을래"), "parallel_clauses"));
  EXPECT_EQ(run("여름이 좋아 겨울이 좋아").label, IntentLabel::kAlternative);
}

TEST_F(ClassifyTest, YesNoVariants) {
  EXPECT_EQ(run("밥 먹었어").label, IntentLabel::kYesNo);
  EXPECT_EQ(run("숙제 했어 안 했어").label, IntentLabel::kYesNo);
  EXPECT_EQ(run("오늘 날씨 알고 싶어").label, IntentLabel::kYesNo);
  EXPECT_EQ(run("시청 가나요").label, IntentLabel::kYesNo);
}

TEST_F(ClassifyTest, Commands) {
  EXPECT_EQ(run("뛰지 마세요").label, IntentLabel::kProhibition);
  EXPECT_EQ(run("창문 좀 열어줘").label, IntentLabel::kRequirement);
  EXPECT_EQ(run("놀지 말고 숙제해").label, IntentLabel::kStrongRequirement);
  // 지 말고 followed by another 지 마 stays a prohibition.
  EXPECT_EQ(run("울지 말고 떠들지 마").label, IntentLabel::kProhibition);
}

TEST_F(ClassifyTest, InformalWithWhIsQuestion) {
  EXPECT_EQ(run("집에 언제 와").label, IntentLabel::kWh);
  EXPECT_EQ(run("빨리 와").label, IntentLabel::kRequirement);
}

TEST_F(ClassifyTest, IndependentInstancesAgree) {
  const Classifier other(Lexicon::builtin());
  for (const testing::GoldenCase &g : testing::kGoldenCases) {
    const NormalizedUtterance u = analyzer_.normalize(g.utterance);
    const Classification a = classifier_.classify(u);
    const Classification b = other.classify(u);
    EXPECT_EQ(a.label, b.label);
    ASSERT_EQ(a.evidence.size(), b.evidence.size());
    for (std::size_t i = 0; i < a.evidence.size(); ++i) {
      EXPECT_EQ(a.evidence[i].rule, b.evidence[i].rule);
    }
  }
}

TEST_F(ClassifyTest, NegatedInformalAsks) {
  const Classification c = run("버스 안 가요");
  EXPECT_EQ(c.label, IntentLabel::kYesNo);
  EXPECT_TRUE(has_rule(c, "negated_informal"));
  // The conditional 안 돼 frame stays a prohibition.
  EXPECT_EQ(run("그 물 마시면 안 돼").label, IntentLabel::kProhibition);
}

TEST_F(ClassifyTest, InfoVerbNeedsSomethingToAskFor) {
  EXPECT_EQ(run("천천히 말해주세요").label, IntentLabel::kRequirement);
  EXPECT_EQ(run("크게 말해").label, IntentLabel::kRequirement);
  EXPECT_EQ(run("이번 주 일정을 모두 말해").label, IntentLabel::kWh);
  EXPECT_EQ(run("누가 왔는지 말해").label, IntentLabel::kWh);
  EXPECT_TRUE(has_rule(run("비밀번호 알려줘"), "info_seeking"));
}

TEST_F(ClassifyTest, FormalAndPoliteFusedEndings) {
  EXPECT_EQ(run("밥 먹었습니까").label, IntentLabel::kYesNo);
  EXPECT_EQ(run("언제 와요").label, IntentLabel::kWh);
  EXPECT_EQ(run("여기로 와요").label, IntentLabel::kRequirement);
}

}  // namespace
}  // namespace saek
