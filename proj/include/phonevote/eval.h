// phonevote/eval.h

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

#ifndef PHONEVOTE_EVAL_H_
#define PHONEVOTE_EVAL_H_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phonevote/language.h"

namespace phonevote {

using LabelMap = std::map<std::string, LanguageTag>;

/// Gold labels file: "utt <TAB> LANG" per line. Throws ParseError.
LabelMap ReadGoldLabels(std::string_view text);
std::string WriteGoldLabels(const LabelMap &gold);

struct LanguageScore {
  long long correct = 0;
  long long total = 0;
  double accuracy() const {
    return static_cast<double>(correct) / static_cast<double>(total);
  }
};

struct EvalReport {
  double overall_accuracy = 0.0;
  long long correct = 0;
  long long scored = 0;
  /// Only languages with at least one gold utterance appear here.
  std::map<LanguageTag, LanguageScore> per_language;
  /// (gold, predicted) -> count
  std::map<std::pair<LanguageTag, LanguageTag>, long long> confusion;
  /// Ids present in only one of the two maps, sorted.
  std::vector<std::string> skipped;
};

/// Scores the utterances present in both maps; the rest go to `skipped`.
/// Throws phonevote::Error if the maps share no utterance.
EvalReport Score(const LabelMap &predictions, const LabelMap &gold);

/// Overall accuracy, one row per gold language, then the confusion matrix
/// (rows gold, columns predicted, tags sorted). Percentages to 2 decimals.
std::string ReportText(const EvalReport &report);

std::string ReportJson(const EvalReport &report);

}  // namespace phonevote

#endif  // PHONEVOTE_EVAL_H_
