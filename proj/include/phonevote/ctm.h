// phonevote/ctm.h

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

// Time-marked phone alignments (CTM) and the phone symbol table.
//
//   utt1 1 0.32 0.08 ES_b 0.97
//   <utterance> <channel> <start> <duration> <token> [<confidence>]
//
// The token is a tagged phone (ES_b), a silence symbol (SIL, SPN, NSN and
// their _B/_E/_I/_S variants), or an integer phone id that MapPhoneIds
// resolves through a phones.txt table.

#ifndef PHONEVOTE_CTM_H_
#define PHONEVOTE_CTM_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace phonevote {

struct CtmRecord {
  std::string utterance_id;
  std::string channel = "1";
  double start = 0.0;
  double duration = 0.0;
  std::string token;
  std::optional<double> confidence;

  double end() const { return start + duration; }

  friend bool operator==(const CtmRecord &, const CtmRecord &) = default;
};

/// Throws ParseError on a wrong field count, a non-numeric or negative time,
/// or a confidence outside [0, 1].
std::vector<CtmRecord> ParseCtm(std::string_view text);

/// Times and confidences are printed with two decimals.
std::string WriteCtm(std::span<const CtmRecord> records);

/// Bijection between integer phone ids and phone symbols (phones.txt).
class PhoneTable {
 public:
  /// Throws phonevote::Error naming the collision on a repeated id or symbol.
  void Add(std::string symbol, long long id);

  /// nullptr / nullopt when absent.
  const std::string *Symbol(long long id) const;
  std::optional<long long> Id(std::string_view symbol) const;

  std::size_t size() const { return by_id_.size(); }
  const std::map<long long, std::string> &by_id() const { return by_id_; }

 private:
  std::map<long long, std::string> by_id_;
  std::map<std::string, long long, std::less<>> by_symbol_;
};

/// Lines of "SYMBOL ID". Throws ParseError with a line number.
PhoneTable ParsePhoneTable(std::string_view text);

/// Lines of "SYMBOL ID" in id order.
std::string WritePhoneTable(const PhoneTable &table);

/// Replaces integer tokens by their symbols. Throws phonevote::Error carrying
/// the id and the record index when a token is not an id in `table`.
std::vector<CtmRecord> MapPhoneIds(std::span<const CtmRecord> records,
                                   const PhoneTable &table);

/// True when every token is an integer, i.e. the file still needs
/// MapPhoneIds.
bool HasNumericTokens(std::span<const CtmRecord> records);

using UtteranceGroups =
    std::vector<std::pair<std::string, std::vector<CtmRecord>>>;

/// Groups by utterance in order of first appearance; each group is stably
/// sorted by start time.
UtteranceGroups GroupByUtterance(std::span<const CtmRecord> records);

}  // namespace phonevote

#endif  // PHONEVOTE_CTM_H_
