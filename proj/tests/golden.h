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

#ifndef SAEK_TESTS_GOLDEN_H_
#define SAEK_TESTS_GOLDEN_H_

#include <array>
#include <string_view>

#include "saek/classify.h"

namespace saek::testing {

struct GoldenCase {
  std::string_view id;
  std::string_view utterance;
  IntentLabel label;
  std::string_view argument;  // canonical extractive output
  std::string_view category;  // Korean tag
  // Published annotation when it differs from the extractive output. Both
  // deltas insert words absent from the utterance (타고, 지금).
  std::string_view annotated = {};
};

inline constexpr std::array<GoldenCase, 13> kGoldenCases = {{
    {"yesno_signup", "너 의료 봉사 신청 했어", IntentLabel::kYesNo, "의료 봉사 신청 여부", "여부"},
    {"choice_bus_taxi", "버스로 올거야 택시로 올거야", IntentLabel::kAlternative,
     "버스 택시 중 올 것", "선택", "버스 택시 중 타고 올 것"},
    {"who_came", "오늘은 누구 왔니", IntentLabel::kWh, "오늘 온 사람", "사람"},
    {"what_stock_option", "스톡옵션이 뭔 줄 아니", IntentLabel::kWh, "스톡옵션 의미", "의미"},
    {"where_lobby", "어디 있니 로비야", IntentLabel::kWh, "있는 위치", "위치",
     "지금 있는 위치"},
    {"when_arrive", "대구 몇 시에 도착이야", IntentLabel::kWh, "대구 도착 시간", "시간"},
    {"why_traffic", "이 동네 갑자기 왜 이렇게 막히지", IntentLabel::kWh, "막히는 이유", "이유"},
    {"how_remit", "해외 송금 어떻게 하는 거야", IntentLabel::kWh, "해외 송금 방법", "방법"},
    {"ph_typhoon", "태풍 오니까 밖에 나가지 마", IntentLabel::kProhibition,
     "밖에 나가지 않기", "금지"},
    {"sr_seatbelt", "안전띠 안매면 큰일나", IntentLabel::kStrongRequirement, "안전띠 매기",
     "요구"},
    {"req_confirm", "인적사항 확인 바랍니다", IntentLabel::kRequirement,
     "인적사항 확인하기", "요구"},
    {"info_schedule", "이번 주 일정을 모두 말해", IntentLabel::kWh, "이번 주 모든 일정", "의미"},
    {"sr_malgo", "욕심부리지 말고 지금 팔아", IntentLabel::kStrongRequirement, "지금 팔기",
     "요구"},
}};

}  // namespace saek::testing

#endif  // SAEK_TESTS_GOLDEN_H_
