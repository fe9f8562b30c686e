// src/corpus.cc

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

#include "phonevote/corpus.h"

#include <unicode/locid.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <numeric>

#include "phonevote/random.h"
#include "phonevote/text.h"

namespace phonevote {

namespace {

bool IsPunctuation(UChar32 c) {
  return (U_GET_GC_MASK(c) & U_GC_P_MASK) != 0;
}

}  // namespace

std::vector<std::string> NormalizeLine(std::string_view raw) {
  icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  icu::UnicodeString kept;
  for (int32_t i = 0; i < in.length(); i = in.moveIndex32(i, 1)) {
    UChar32 c = in.char32At(i);
    if (IsPunctuation(c)) continue;
    kept.append(u_isUWhiteSpace(c) ? UChar32(' ') : c);
  }
  kept.toLower(icu::Locale::getRoot());
  std::string utf8;
  kept.toUTF8String(utf8);

  std::vector<std::string> tokens;
  for (std::string_view field : SplitFields(utf8)) tokens.emplace_back(field);
  return tokens;
}

Corpus BuildCorpus(std::span<const CorpusPart> parts, std::uint64_t seed) {
  Corpus ordered;
  for (const CorpusPart &part : parts) {
    for (const std::string &raw : part.raw_lines) {
      auto tokens = NormalizeLine(raw);
      if (tokens.empty()) continue;
      ordered.lines.push_back(std::move(tokens));
      ordered.language_of_line.push_back(part.language);
    }
  }

  std::vector<std::size_t> perm(ordered.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rng rng(seed);
  rng.Shuffle(std::span<std::size_t>(perm));

  Corpus shuffled;
  shuffled.lines.reserve(perm.size());
  shuffled.language_of_line.reserve(perm.size());
  for (std::size_t i : perm) {
    shuffled.lines.push_back(std::move(ordered.lines[i]));
    shuffled.language_of_line.push_back(ordered.language_of_line[i]);
  }
  return shuffled;
}

std::string WriteCorpus(const Corpus &corpus) {
  std::string out;
  for (const auto &line : corpus.lines) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (i > 0) out += ' ';
      out += line[i];
    }
    out += '\n';
  }
  return out;
}

}  // namespace phonevote
