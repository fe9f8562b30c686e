// phonevote/vote.h

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

// Utterance-level language identification by phone vote: count the language
// tags of the aligned phones and pick the language with the most phones.

#ifndef PHONEVOTE_VOTE_H_
#define PHONEVOTE_VOTE_H_

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phonevote/ctm.h"
#include "phonevote/language.h"

namespace phonevote {

using LanguageTally = std::map<LanguageTag, long long>;

/// Counts each tagged phone under its language; silence tokens are skipped.
/// Throws phonevote::Error on a token that is neither.
LanguageTally Tally(std::span<const CtmRecord> records);

/// Language with the highest count. Ties go to the tied language listed
/// earliest in `tie_break`; tied languages missing from the list come after
/// the listed ones, in tag order. An empty tally yields tie_break[0]; with
/// an empty tie_break too it throws phonevote::Error ("no evidence").
LanguageTag Predict(const LanguageTally &tally,
                    std::span<const LanguageTag> tie_break);

/// Top count minus the runner-up count (0 when there is no runner-up).
long long Margin(const LanguageTally &tally);

struct Prediction {
  std::string utterance_id;
  LanguageTag language;
  LanguageTally tally;
  long long margin = 0;
  /// The tally was empty and `language` came from the tie-break list.
  bool no_evidence = false;
};

struct IdentifyResult {
  std::vector<Prediction> predictions;                      // first-appearance order
  std::vector<std::pair<std::string, std::string>> failed;  // utterance, reason
};

/// Groups records by utterance and votes on each. A failing utterance is
/// reported in `failed` and does not stop the batch.
IdentifyResult Identify(std::span<const CtmRecord> records,
                        std::span<const LanguageTag> tie_break);

/// {"AR":1,"ES":3,"FR":2}
std::string TallyJson(const LanguageTally &tally);

/// One line per prediction: utt <TAB> language <TAB> margin <TAB> tally-json.
std::string WritePredictions(std::span<const Prediction> predictions);

/// Reads the first two columns of a predictions file (utt, language).
/// Throws ParseError with a line number.
std::map<std::string, LanguageTag> ReadPredictions(std::string_view text);

}  // namespace phonevote

#endif  // PHONEVOTE_VOTE_H_
