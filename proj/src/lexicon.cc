// src/lexicon.cc

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

#include "phonevote/lexicon.h"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "phonevote/corpus.h"
#include "phonevote/error.h"
#include "phonevote/text.h"

namespace phonevote {

namespace {

struct HeadWord {
  std::string word;
  int variant = 1;
};

// "le(2)" -> {"le", 2}; "le" -> {"le", 1}.
HeadWord ParseHeadWord(std::string_view field, std::size_t line_no) {
  HeadWord head;
  std::size_t open = field.rfind('(');
  if (!field.empty() && field.back() == ')' && open != std::string_view::npos &&
      open > 0) {
    std::string_view digits = field.substr(open + 1, field.size() - open - 2);
    long long n = 0;
    if (!ParseInt(digits, &n) || n < 1 || n > 1000000)
      throw ParseError(line_no, "variant suffix '" + std::string(digits) +
                                    "' is not a positive integer");
    head.variant = static_cast<int>(n);
    field = field.substr(0, open);
  }
  head.word = ToLowerUtf8(field);
  return head;
}

template <typename MakePhone>
Lexicon ReadLines(std::string_view text, MakePhone make_phone) {
  std::vector<LexiconEntry> entries;
  std::size_t line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (line.starts_with(";;;")) continue;
    auto fields = SplitFields(line);
    if (fields.empty()) continue;
    if (fields.size() < 2)
      throw ParseError(line_no, "expected a word followed by its phones");
    HeadWord head = ParseHeadWord(fields[0], line_no);
    LexiconEntry entry{std::move(head.word), head.variant, {}};
    for (std::size_t i = 1; i < fields.size(); ++i) {
      try {
        entry.pron.push_back(make_phone(fields[i]));
      } catch (const ParseError &) {
        throw;
      } catch (const Error &e) {
        throw ParseError(line_no, e.what());
      }
    }
    if (!std::all_of(entry.pron.begin(), entry.pron.end(),
                     [&](const TaggedPhone &p) {
                       return p.language == entry.pron.front().language;
                     }))
      throw ParseError(line_no, "pronunciation of '" + entry.word +
                                    "' mixes languages");
    entries.push_back(std::move(entry));
  }
  return Lexicon(std::move(entries));
}

}  // namespace

Lexicon::Lexicon(std::vector<LexiconEntry> entries)
    : entries_(std::move(entries)) {
  for (const LexiconEntry &e : entries_) {
    if (e.word.empty() || e.pron.empty())
      throw Error("lexicon entry with empty word or pronunciation");
    if (e.variant < 1)
      throw Error("variant of '" + e.word + "' must be >= 1");
    for (const TaggedPhone &p : e.pron)
      if (p.language != e.language())
        throw Error("pronunciation of '" + e.word + "' mixes languages");
    languages_.insert(e.language());
  }
}

Lexicon LoadLexicon(std::string_view text, const LanguageTag &tag) {
  return ReadLines(text, [&](std::string_view phone) {
    TaggedPhone tagged{tag, std::string(phone)};
    if (!TaggedPhone::TryParse(tagged.ToString()))
      throw Error("bad phone symbol '" + std::string(phone) + "'");
    return tagged;
  });
}

Lexicon ReadTaggedLexicon(std::string_view text) {
  return ReadLines(text,
                   [](std::string_view phone) { return TaggedPhone::Parse(phone); });
}

Lexicon FilterTopK(const Lexicon &lex, std::span<const std::string> corpus,
                   std::size_t k) {
  std::unordered_map<std::string, std::size_t> counts;
  for (const std::string &line : corpus)
    for (std::string &token : NormalizeLine(line)) ++counts[std::move(token)];

  std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(),
                                                          counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto &a, const auto &b) {
    return std::tie(b.second, a.first) < std::tie(a.second, b.first);
  });
  if (ranked.size() > k) ranked.resize(k);

  std::unordered_set<std::string> keep;
  for (auto &[word, count] : ranked) keep.insert(std::move(word));

  std::vector<LexiconEntry> kept;
  for (const LexiconEntry &e : lex.entries())
    if (keep.contains(e.word)) kept.push_back(e);
  return Lexicon(std::move(kept));
}

Lexicon MergeLexicons(std::span<const Lexicon> parts) {
  std::set<LanguageTag> seen_languages;
  for (const Lexicon &part : parts) {
    if (part.languages().size() > 1)
      throw Error("merge input part holds more than one language");
    for (const LanguageTag &tag : part.languages())
      if (!seen_languages.insert(tag).second)
        throw Error("two merge inputs share language " + tag.code());
  }

  std::map<std::string, int> next_variant;
  std::set<std::pair<std::string, std::vector<TaggedPhone>>> seen_prons;
  std::vector<LexiconEntry> merged;
  for (const Lexicon &part : parts) {
    for (const LexiconEntry &e : part.entries()) {
      // The pronunciation carries the language, so (word, pron) identifies
      // an exact duplicate.
      if (!seen_prons.emplace(e.word, e.pron).second) continue;
      merged.push_back({e.word, ++next_variant[e.word], e.pron});
    }
  }
  return Lexicon(std::move(merged));
}

std::vector<Lexicon> SplitByLanguage(const Lexicon &lex) {
  std::vector<LanguageTag> order;
  std::map<LanguageTag, std::vector<LexiconEntry>> by_language;
  for (const LexiconEntry &e : lex.entries()) {
    auto [it, inserted] = by_language.try_emplace(e.language());
    if (inserted) order.push_back(e.language());
    it->second.push_back(e);
  }
  std::vector<Lexicon> parts;
  for (const LanguageTag &tag : order)
    parts.emplace_back(std::move(by_language[tag]));
  return parts;
}

std::string WriteLexicon(const Lexicon &lex) {
  std::string out;
  for (const LexiconEntry &e : lex.entries()) {
    out += e.word;
    if (e.variant > 1) out += "(" + std::to_string(e.variant) + ")";
    out += ' ';
    for (const TaggedPhone &p : e.pron) {
      out += ' ';
      out += p.ToString();
    }
    out += '\n';
  }
  return out;
}

}  // namespace phonevote
