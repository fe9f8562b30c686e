// phonevote/codeswitch.h

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

// Code-switch detection over a time-ordered tagged phone stream.
//
// The current language starts as the language of the first non-silence
// phone. A run of consecutive phones in one other language is absorbed into
// the current segment until it reaches `threshold` phones; at that point the
// language switches, and the new segment starts at the first phone of the
// run. Silence is dropped before scanning and does not break runs.

#ifndef PHONEVOTE_CODESWITCH_H_
#define PHONEVOTE_CODESWITCH_H_

#include <span>
#include <string>
#include <vector>

#include "phonevote/ctm.h"
#include "phonevote/language.h"

namespace phonevote {

inline constexpr int kDefaultSwitchThreshold = 3;

struct Segment {
  double start = 0.0;
  double end = 0.0;
  LanguageTag language;
  long long phone_count = 0;

  friend bool operator==(const Segment &, const Segment &) = default;
};

/// `records` must be sorted by start time (GroupByUtterance does this).
/// Throws phonevote::Error when threshold < 1, when no non-silence phone is
/// present ("no speech evidence"), or on a malformed token.
std::vector<Segment> SegmentLanguages(std::span<const CtmRecord> records,
                                      int threshold = kDefaultSwitchThreshold);

/// For each segment a line "segment <TAB> start <TAB> end <TAB> LANG <TAB>
/// phones", and before every segment after the first a line
/// "switch <TAB> time <TAB> FROM->TO". Times use two decimals.
std::string SegmentReport(std::span<const Segment> segments);

/// [{"start":..,"end":..,"language":"ES","phone_count":..}, ...]
std::string SegmentsJson(std::span<const Segment> segments);

}  // namespace phonevote

#endif  // PHONEVOTE_CODESWITCH_H_
