// src/eval.cc

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

#include "phonevote/eval.h"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "phonevote/error.h"
#include "phonevote/text.h"

namespace phonevote {

namespace {

std::string Percent(double fraction) { return FormatFixed(100.0 * fraction, 2) + "%"; }

std::string PadLeft(const std::string &s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string PadRight(const std::string &s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

LabelMap ReadGoldLabels(std::string_view text) {
  LabelMap gold;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    auto fields = SplitFields(line);
    if (fields.empty()) continue;
    if (fields.size() != 2)
      throw ParseError(line_no, "expected 'utterance<TAB>language'");
    auto tag = LanguageTag::TryParse(fields[1]);
    if (!tag)
      throw ParseError(line_no, "bad language tag '" + std::string(fields[1]) + "'");
    if (!gold.emplace(std::string(fields[0]), std::move(*tag)).second)
      throw ParseError(line_no, "utterance '" + std::string(fields[0]) +
                                    "' labeled twice");
  }
  return gold;
}

std::string WriteGoldLabels(const LabelMap &gold) {
  std::string out;
  for (const auto &[utt, tag] : gold) out += utt + '\t' + tag.code() + '\n';
  return out;
}

EvalReport Score(const LabelMap &predictions, const LabelMap &gold) {
  EvalReport report;
  for (const auto &[utt, truth] : gold) {
    auto it = predictions.find(utt);
    if (it == predictions.end()) {
      report.skipped.push_back(utt);
      continue;
    }
    const LanguageTag &guess = it->second;
    LanguageScore &row = report.per_language[truth];
    ++row.total;
    ++report.scored;
    if (guess == truth) {
      ++row.correct;
      ++report.correct;
    }
    ++report.confusion[{truth, guess}];
  }
  for (const auto &[utt, guess] : predictions)
    if (!gold.contains(utt)) report.skipped.push_back(utt);
  std::sort(report.skipped.begin(), report.skipped.end());

  if (report.scored == 0)
    throw Error("predictions and gold labels share no utterance id");
  report.overall_accuracy =
      static_cast<double>(report.correct) / static_cast<double>(report.scored);
  return report;
}

std::string ReportText(const EvalReport &report) {
  std::string out = "overall " + Percent(report.overall_accuracy) + " (" +
                    std::to_string(report.correct) + "/" +
                    std::to_string(report.scored) + ")\n\n";

  out += "language  correct  total  accuracy\n";
  for (const auto &[tag, row] : report.per_language)
    out += PadRight(tag.code(), 8) + PadLeft(std::to_string(row.correct), 9) +
           PadLeft(std::to_string(row.total), 7) + PadLeft(Percent(row.accuracy()), 10) +
           '\n';

  std::set<LanguageTag> tags;
  for (const auto &[cell, count] : report.confusion) {
    tags.insert(cell.first);
    tags.insert(cell.second);
  }
  std::size_t width = 8;
  for (const auto &tag : tags) width = std::max(width, tag.code().size() + 2);
  for (const auto &[cell, count] : report.confusion)
    width = std::max(width, std::to_string(count).size() + 2);

  out += "\nconfusion (rows gold, columns predicted)\n";
  out += PadRight("gold", width);
  for (const auto &tag : tags) out += PadLeft(tag.code(), width);
  out += '\n';
  for (const auto &gold_tag : tags) {
    if (!report.per_language.contains(gold_tag)) continue;
    out += PadRight(gold_tag.code(), width);
    for (const auto &pred_tag : tags) {
      auto it = report.confusion.find({gold_tag, pred_tag});
      out += PadLeft(std::to_string(it == report.confusion.end() ? 0 : it->second),
                     width);
    }
    out += '\n';
  }

  if (!report.skipped.empty())
    out += "\nskipped " + std::to_string(report.skipped.size()) +
           " utterance(s) present in only one of predictions/gold\n";
  return out;
}

std::string ReportJson(const EvalReport &report) {
  nlohmann::ordered_json j;
  j["overall_accuracy"] = report.overall_accuracy;
  j["correct"] = report.correct;
  j["scored"] = report.scored;
  nlohmann::ordered_json per = nlohmann::ordered_json::object();
  for (const auto &[tag, row] : report.per_language)
    per[tag.code()] = {{"correct", row.correct},
                       {"total", row.total},
                       {"accuracy", row.accuracy()}};
  j["per_language"] = per;
  nlohmann::ordered_json confusion = nlohmann::ordered_json::array();
  for (const auto &[cell, count] : report.confusion)
    confusion.push_back({{"gold", cell.first.code()},
                         {"predicted", cell.second.code()},
                         {"count", count}});
  j["confusion"] = confusion;
  j["skipped"] = report.skipped;
  return j.dump(2) + "\n";
}

}  // namespace phonevote
