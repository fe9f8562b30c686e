// src/codeswitch.cc

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

#include "phonevote/codeswitch.h"

#include <optional>

#include "json.hpp"
#include "phonevote/error.h"
#include "phonevote/text.h"

namespace phonevote {

namespace {

struct TimedPhone {
  LanguageTag language;
  double start;
  double end;
};

}  // namespace

std::vector<Segment> SegmentLanguages(std::span<const CtmRecord> records,
                                      int threshold) {
  if (threshold < 1) throw Error("code-switch threshold must be >= 1");

  std::vector<TimedPhone> phones;
  for (const CtmRecord &r : records) {
    if (IsSilenceToken(r.token)) continue;
    phones.push_back({TaggedPhone::Parse(r.token).language, r.start, r.end()});
  }
  if (phones.empty()) throw Error("no speech evidence: only silence phones");

  std::vector<Segment> segments;
  Segment current{phones.front().start, 0.0, phones.front().language, 1};

  // Pending run of consecutive phones in one language other than current's.
  std::optional<LanguageTag> run_language;
  std::size_t run_first = 0;
  long long run_length = 0;

  auto absorb_run = [&]() {
    current.phone_count += run_length;
    run_language.reset();
    run_length = 0;
  };

  for (std::size_t i = 1; i < phones.size(); ++i) {
    const TimedPhone &p = phones[i];
    if (p.language == current.language) {
      absorb_run();
      ++current.phone_count;
      continue;
    }
    if (run_language != p.language) {
      absorb_run();
      run_language = p.language;
      run_first = i;
    }
    if (++run_length == threshold) {
      double switch_time = phones[run_first].start;
      current.end = switch_time;
      segments.push_back(current);
      current = Segment{switch_time, 0.0, *run_language, run_length};
      run_language.reset();
      run_length = 0;
    }
  }
  absorb_run();
  current.end = phones.back().end;
  segments.push_back(current);
  return segments;
}

std::string SegmentReport(std::span<const Segment> segments) {
  std::string out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const Segment &s = segments[i];
    if (i > 0)
      out += "switch\t" + FormatFixed(s.start, 2) + '\t' +
             segments[i - 1].language.code() + "->" + s.language.code() + '\n';
    out += "segment\t" + FormatFixed(s.start, 2) + '\t' + FormatFixed(s.end, 2) +
           '\t' + s.language.code() + '\t' + std::to_string(s.phone_count) + '\n';
  }
  return out;
}

std::string SegmentsJson(std::span<const Segment> segments) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Segment &s : segments)
    arr.push_back({{"start", s.start},
                   {"end", s.end},
                   {"language", s.language.code()},
                   {"phone_count", s.phone_count}});
  return arr.dump();
}

}  // namespace phonevote
