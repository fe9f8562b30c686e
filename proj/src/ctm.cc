// src/ctm.cc

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

#include "phonevote/ctm.h"

#include <algorithm>
#include <unordered_map>

#include "phonevote/error.h"
#include "phonevote/text.h"

namespace phonevote {

std::vector<CtmRecord> ParseCtm(std::string_view text) {
  std::vector<CtmRecord> records;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    auto fields = SplitFields(line);
    if (fields.empty()) continue;
    if (fields.size() != 5 && fields.size() != 6)
      throw ParseError(line_no, "expected 5 or 6 fields, found " +
                                    std::to_string(fields.size()));
    CtmRecord rec;
    rec.utterance_id = fields[0];
    rec.channel = fields[1];
    if (!ParseDouble(fields[2], &rec.start) || !ParseDouble(fields[3], &rec.duration))
      throw ParseError(line_no, "start and duration must be numbers");
    if (rec.start < 0.0 || rec.duration < 0.0)
      throw ParseError(line_no, "negative start or duration");
    rec.token = fields[4];
    if (fields.size() == 6) {
      double conf = 0.0;
      if (!ParseDouble(fields[5], &conf))
        throw ParseError(line_no, "confidence must be a number");
      if (conf < 0.0 || conf > 1.0)
        throw ParseError(line_no, "confidence " + std::string(fields[5]) +
                                      " outside [0, 1]");
      rec.confidence = conf;
    }
    records.push_back(std::move(rec));
  }
  return records;
}

std::string WriteCtm(std::span<const CtmRecord> records) {
  std::string out;
  for (const CtmRecord &r : records) {
    out += r.utterance_id + ' ' + r.channel + ' ' + FormatFixed(r.start, 2) +
           ' ' + FormatFixed(r.duration, 2) + ' ' + r.token;
    if (r.confidence) out += ' ' + FormatFixed(*r.confidence, 2);
    out += '\n';
  }
  return out;
}

void PhoneTable::Add(std::string symbol, long long id) {
  if (const std::string *existing = Symbol(id))
    throw Error("phone id " + std::to_string(id) + " assigned to both '" +
                *existing + "' and '" + symbol + "'");
  if (auto existing = Id(symbol))
    throw Error("phone symbol '" + symbol + "' has two ids, " +
                std::to_string(*existing) + " and " + std::to_string(id));
  by_symbol_.emplace(symbol, id);
  by_id_.emplace(id, std::move(symbol));
}

const std::string *PhoneTable::Symbol(long long id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &it->second;
}

std::optional<long long> PhoneTable::Id(std::string_view symbol) const {
  auto it = by_symbol_.find(symbol);
  if (it == by_symbol_.end()) return std::nullopt;
  return it->second;
}

PhoneTable ParsePhoneTable(std::string_view text) {
  PhoneTable table;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    auto fields = SplitFields(line);
    if (fields.empty()) continue;
    long long id = 0;
    if (fields.size() != 2 || !ParseInt(fields[1], &id))
      throw ParseError(line_no, "expected 'SYMBOL ID'");
    try {
      table.Add(std::string(fields[0]), id);
    } catch (const Error &e) {
      throw ParseError(line_no, e.what());
    }
  }
  return table;
}

std::string WritePhoneTable(const PhoneTable &table) {
  std::string out;
  for (const auto &[id, symbol] : table.by_id())
    out += symbol + ' ' + std::to_string(id) + '\n';
  return out;
}

std::vector<CtmRecord> MapPhoneIds(std::span<const CtmRecord> records,
                                   const PhoneTable &table) {
  std::vector<CtmRecord> mapped(records.begin(), records.end());
  for (std::size_t i = 0; i < mapped.size(); ++i) {
    long long id = 0;
    const std::string *symbol = nullptr;
    if (ParseInt(mapped[i].token, &id)) symbol = table.Symbol(id);
    if (symbol == nullptr)
      throw Error("record " + std::to_string(i) + " (utterance " +
                  mapped[i].utterance_id + "): phone id '" + mapped[i].token +
                  "' not in the phone table");
    mapped[i].token = *symbol;
  }
  return mapped;
}

bool HasNumericTokens(std::span<const CtmRecord> records) {
  long long id = 0;
  return !records.empty() &&
         std::all_of(records.begin(), records.end(), [&](const CtmRecord &r) {
           return ParseInt(r.token, &id);
         });
}

UtteranceGroups GroupByUtterance(std::span<const CtmRecord> records) {
  UtteranceGroups groups;
  std::unordered_map<std::string, std::size_t> index;
  for (const CtmRecord &r : records) {
    auto [it, inserted] = index.try_emplace(r.utterance_id, groups.size());
    if (inserted) groups.emplace_back(r.utterance_id, std::vector<CtmRecord>{});
    groups[it->second].second.push_back(r);
  }
  for (auto &[utt, group] : groups)
    std::stable_sort(group.begin(), group.end(),
                     [](const CtmRecord &a, const CtmRecord &b) {
                       return a.start < b.start;
                     });
  return groups;
}

}  // namespace phonevote
