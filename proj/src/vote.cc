// src/vote.cc

// Copyright 2026 The phonevote Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "phonevote/vote.h"

#include <algorithm>

#include "json.hpp"
#include "phonevote/error.h"
#include "phonevote/text.h"

namespace phonevote {

LanguageTally Tally(std::span<const CtmRecord> records) {
  LanguageTally tally;
  for (const CtmRecord &r : records) {
    if (IsSilenceToken(r.token)) continue;
    auto phone = TaggedPhone::TryParse(r.token);
    if (!phone)
      throw Error("token '" + r.token + "' at " + FormatFixed(r.start, 2) +
                  "s is neither a tagged phone nor silence");
    ++tally[phone->language];
  }
  return tally;
}

LanguageTag Predict(const LanguageTally &tally,
                    std::span<const LanguageTag> tie_break) {
  if (tally.empty()) {
    if (tie_break.empty()) throw Error("no evidence: no language-tagged phones");
    return tie_break.front();
  }
  auto rank = [&](const LanguageTag &tag) {
    auto it = std::find(tie_break.begin(), tie_break.end(), tag);
    return static_cast<std::size_t>(it - tie_break.begin());
  };
  // std::map iterates in tag order, so among equally ranked (unlisted)
  // languages the first one seen wins.
  const LanguageTag *best = nullptr;
  long long best_count = -1;
  for (const auto &[tag, count] : tally) {
    if (count > best_count ||
        (count == best_count && rank(tag) < rank(*best))) {
      best = &tag;
      best_count = count;
    }
  }
  return *best;
}

long long Margin(const LanguageTally &tally) {
  long long top = 0, second = 0;
  for (const auto &[tag, count] : tally) {
    if (count > top) {
      second = top;
      top = count;
    } else if (count > second) {
      second = count;
    }
  }
  return top - second;
}

IdentifyResult Identify(std::span<const CtmRecord> records,
                        std::span<const LanguageTag> tie_break) {
  IdentifyResult result;
  for (auto &[utt, group] : GroupByUtterance(records)) {
    try {
      LanguageTally tally = Tally(group);
      LanguageTag language = Predict(tally, tie_break);
      long long margin = Margin(tally);
      bool no_evidence = tally.empty();
      result.predictions.push_back(
          {utt, std::move(language), std::move(tally), margin, no_evidence});
    } catch (const Error &e) {
      result.failed.emplace_back(utt, e.what());
    }
  }
  return result;
}

std::string TallyJson(const LanguageTally &tally) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto &[tag, count] : tally) j[tag.code()] = count;
  return j.dump();
}

std::string WritePredictions(std::span<const Prediction> predictions) {
  std::string out;
  for (const Prediction &p : predictions)
    out += p.utterance_id + '\t' + p.language.code() + '\t' +
           std::to_string(p.margin) + '\t' + TallyJson(p.tally) + '\n';
  return out;
}

std::map<std::string, LanguageTag> ReadPredictions(std::string_view text) {
  std::map<std::string, LanguageTag> out;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    auto fields = SplitFields(line);
    if (fields.empty()) continue;
    if (fields.size() < 2)
      throw ParseError(line_no, "expected utterance id and language");
    auto tag = LanguageTag::TryParse(fields[1]);
    if (!tag)
      throw ParseError(line_no, "bad language tag '" + std::string(fields[1]) + "'");
    if (!out.emplace(std::string(fields[0]), std::move(*tag)).second)
      throw ParseError(line_no, "utterance '" + std::string(fields[0]) +
                                    "' listed twice");
  }
  return out;
}

}  // namespace phonevote
