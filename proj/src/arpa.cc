// src/arpa.cc

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

#include <map>

#include "phonevote/error.h"
#include "phonevote/ngram.h"
#include "phonevote/text.h"

namespace phonevote {

std::string WriteArpa(const NgramModel &model) {
  std::string out = "\\data\\\n";
  for (int n = 1; n <= model.order(); ++n)
    out += "ngram " + std::to_string(n) + "=" +
           std::to_string(model.table(n).size()) + "\n";
  for (int n = 1; n <= model.order(); ++n) {
    out += "\n\\" + std::to_string(n) + "-grams:\n";
    for (const auto &[ngram, entry] : model.table(n)) {
      out += FormatFixed(entry.logprob, 6);
      out += '\t';
      for (std::size_t i = 0; i < ngram.size(); ++i) {
        if (i > 0) out += ' ';
        out += ngram[i];
      }
      if (entry.backoff) {
        out += '\t';
        out += FormatFixed(*entry.backoff, 6);
      }
      out += '\n';
    }
  }
  out += "\n\\end\\\n";
  return out;
}

namespace {

// Parses "\3-grams:" into 3; 0 if the line is not a section header.
int SectionOrder(std::string_view line) {
  if (!line.starts_with('\\') || !line.ends_with("-grams:")) return 0;
  long long n = 0;
  if (!ParseInt(line.substr(1, line.size() - 1 - 7), &n) || n < 1) return 0;
  return static_cast<int>(n);
}

}  // namespace

NgramModel ParseArpa(std::string_view text) {
  enum class State { kPreamble, kHeader, kSection, kDone };
  State state = State::kPreamble;
  std::map<int, long long> declared;
  std::vector<NgramModel::Table> tables;
  int current = 0;
  std::size_t section_line = 0;
  std::size_t line_no = 0;

  auto close_section = [&]() {
    if (current == 0) return;
    long long listed = static_cast<long long>(tables[current - 1].size());
    if (listed != declared[current])
      throw ParseError(section_line,
                       "order " + std::to_string(current) + ": header declares " +
                           std::to_string(declared[current]) +
                           " n-grams but the section lists " +
                           std::to_string(listed));
  };

  auto begin_sections = [&]() {
    if (declared.empty())
      throw ParseError(line_no, "\\data\\ section lists no n-gram counts");
    int max_order = declared.rbegin()->first;
    for (int k = 1; k <= max_order; ++k)
      if (!declared.contains(k))
        throw ParseError(line_no, "\\data\\ section lacks a count for order " +
                                      std::to_string(k));
    tables.resize(max_order);
  };

  for (std::string_view raw : SplitLines(text)) {
    ++line_no;
    auto fields = SplitFields(raw);
    if (fields.empty()) continue;
    std::string_view line = raw.substr(
        fields.front().data() - raw.data(),
        fields.back().data() + fields.back().size() - fields.front().data());

    if (state == State::kPreamble) {
      if (line == "\\data\\") state = State::kHeader;
      continue;
    }
    if (line == "\\end\\") {
      if (state == State::kHeader) begin_sections();
      close_section();
      state = State::kDone;
      break;
    }
    if (int n = SectionOrder(line)) {
      if (state == State::kHeader) begin_sections();
      close_section();
      if (n > static_cast<int>(tables.size()))
        throw ParseError(line_no, "section for order " + std::to_string(n) +
                                      " not declared in \\data\\");
      if (!tables[n - 1].empty())
        throw ParseError(line_no, "order " + std::to_string(n) + " section repeated");
      current = n;
      section_line = line_no;
      state = State::kSection;
      continue;
    }

    if (state == State::kHeader) {
      // ngram N=COUNT
      std::string_view spec = fields.size() == 2 && fields[0] == "ngram"
                                  ? fields[1]
                                  : std::string_view();
      std::size_t eq = spec.find('=');
      long long n = 0, count = 0;
      if (eq == std::string_view::npos || !ParseInt(spec.substr(0, eq), &n) ||
          !ParseInt(spec.substr(eq + 1), &count) || n < 1 || count < 0)
        throw ParseError(line_no, "expected 'ngram N=COUNT' in \\data\\ section");
      if (declared.contains(static_cast<int>(n)))
        throw ParseError(line_no, "order " + std::to_string(n) + " declared twice");
      declared[static_cast<int>(n)] = count;
      continue;
    }

    // n-gram entry: logprob w1 .. wn [backoff]
    const std::size_t n = static_cast<std::size_t>(current);
    if (fields.size() != n + 1 && fields.size() != n + 2)
      throw ParseError(line_no, "expected " + std::to_string(n) +
                                    " words after the log probability");
    NgramEntry entry;
    if (!ParseDouble(fields[0], &entry.logprob))
      throw ParseError(line_no, "log probability '" + std::string(fields[0]) +
                                    "' is not a number");
    if (entry.logprob > 0.0)
      throw ParseError(line_no, "log probability is positive");
    if (fields.size() == n + 2) {
      if (current == static_cast<int>(tables.size()))
        throw ParseError(line_no, "highest-order n-gram carries a backoff weight");
      double bow = 0.0;
      if (!ParseDouble(fields.back(), &bow))
        throw ParseError(line_no, "backoff weight '" + std::string(fields.back()) +
                                      "' is not a number");
      entry.backoff = bow;
    }
    Ngram ngram(fields.begin() + 1, fields.begin() + 1 + n);
    if (n > 1 && !tables[n - 2].contains(Ngram(ngram.begin(), ngram.end() - 1)))
      throw ParseError(line_no, "prefix of this " + std::to_string(n) +
                                    "-gram is not listed at order " +
                                    std::to_string(n - 1));
    if (!tables[n - 1].emplace(std::move(ngram), entry).second)
      throw ParseError(line_no, "duplicate n-gram");
  }

  if (state == State::kPreamble) throw ParseError(0, "missing \\data\\ header");
  if (state != State::kDone) throw ParseError(line_no, "missing \\end\\ marker");
  for (std::size_t k = 0; k < tables.size(); ++k)
    if (tables[k].size() != static_cast<std::size_t>(declared[k + 1]))
      throw ParseError(line_no, "order " + std::to_string(k + 1) +
                                    ": header declares " +
                                    std::to_string(declared[k + 1]) +
                                    " n-grams but the section lists " +
                                    std::to_string(tables[k].size()));
  return NgramModel(std::move(tables));
}

}  // namespace phonevote
