// phonevote/lexicon.h

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

// Pronunciation lexicons with language-tagged phones.
//
// On disk a lexicon is one entry per line:
//
//   basura  ES_b ES_a ES_s ES_u ES_r ES_a
//   mesa(2)  TR_m TR_e TR_s TR_a
//
// The optional "(n)" suffix numbers homographs (CMUdict convention). Any
// whitespace separates fields on read; lines starting with ";;;" are
// comments. Words are lowercased when read.

#ifndef PHONEVOTE_LEXICON_H_
#define PHONEVOTE_LEXICON_H_

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phonevote/language.h"

namespace phonevote {

struct LexiconEntry {
  std::string word;
  int variant = 1;
  std::vector<TaggedPhone> pron;

  /// Language of the pronunciation (all phones share it).
  const LanguageTag &language() const { return pron.front().language; }

  friend bool operator==(const LexiconEntry &, const LexiconEntry &) = default;
};

class Lexicon {
 public:
  Lexicon() = default;
  /// Throws phonevote::Error if an entry is empty, mixes languages, or has a
  /// variant < 1.
  explicit Lexicon(std::vector<LexiconEntry> entries);

  const std::vector<LexiconEntry> &entries() const { return entries_; }
  const std::set<LanguageTag> &languages() const { return languages_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<LexiconEntry> entries_;
  std::set<LanguageTag> languages_;
};

/// Reads an untagged single-language lexicon and tags every phone with `tag`.
/// Throws ParseError (with line number) on a line with fewer than two fields
/// or a bad "(n)" suffix.
Lexicon LoadLexicon(std::string_view text, const LanguageTag &tag);

/// Reads a lexicon whose phones are already tagged, e.g. WriteLexicon output.
Lexicon ReadTaggedLexicon(std::string_view text);

/// Keeps entries whose word is among the k most frequent tokens of the
/// normalized corpus. Ties at the cutoff go to the lexicographically smaller
/// word.
Lexicon FilterTopK(const Lexicon &lex, std::span<const std::string> corpus,
                   std::size_t k);

/// Concatenates single-language parts and renumbers homographs 1..k per word
/// in encounter order; exact duplicates are dropped. Throws if two parts
/// share a language.
Lexicon MergeLexicons(std::span<const Lexicon> parts);

/// Splits a lexicon into one part per language, in order of first appearance.
std::vector<Lexicon> SplitByLanguage(const Lexicon &lex);

std::string WriteLexicon(const Lexicon &lex);

}  // namespace phonevote

#endif  // PHONEVOTE_LEXICON_H_
