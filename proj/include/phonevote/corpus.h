// phonevote/corpus.h

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

#ifndef PHONEVOTE_CORPUS_H_
#define PHONEVOTE_CORPUS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phonevote/language.h"

namespace phonevote {

/// Lowercases, deletes every character of Unicode general category P*
/// (so "¡Hola, Mundo!" and Arabic '،' lose their punctuation), and splits on
/// Unicode white space.
std::vector<std::string> NormalizeLine(std::string_view raw);

/// A multilingual training corpus: normalized, non-empty token lines plus
/// the language each line came from.
struct Corpus {
  std::vector<std::vector<std::string>> lines;
  std::vector<LanguageTag> language_of_line;

  std::size_t size() const { return lines.size(); }
  bool empty() const { return lines.empty(); }
};

struct CorpusPart {
  LanguageTag language;
  std::vector<std::string> raw_lines;
};

/// Normalizes every line of every part, drops empty ones, and shuffles the
/// result with a permutation determined by `seed` alone.
Corpus BuildCorpus(std::span<const CorpusPart> parts, std::uint64_t seed);

/// One space-joined sentence per line.
std::string WriteCorpus(const Corpus &corpus);

}  // namespace phonevote

#endif  // PHONEVOTE_CORPUS_H_
