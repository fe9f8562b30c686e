// src/language.cc

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

#include "phonevote/language.h"

#include <algorithm>
#include <array>

#include "phonevote/error.h"

namespace phonevote {

namespace {

constexpr std::array<std::string_view, 3> kSilenceCodes = {"SIL", "SPN",
                                                           "NSN"};

bool IsReserved(std::string_view code) {
  return std::find(kSilenceCodes.begin(), kSilenceCodes.end(), code) !=
         kSilenceCodes.end();
}

bool IsAsciiSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

}  // namespace

LanguageTag::LanguageTag(std::string_view code) : code_(code) {
  if (!IsValid(code))
    throw Error("invalid language tag '" + std::string(code) +
                "' (expected 2-8 uppercase ASCII letters)");
}

bool LanguageTag::IsValid(std::string_view code) {
  if (code.size() < 2 || code.size() > 8) return false;
  for (char c : code)
    if (c < 'A' || c > 'Z') return false;
  return !IsReserved(code);
}

std::optional<LanguageTag> LanguageTag::TryParse(std::string_view code) {
  if (!IsValid(code)) return std::nullopt;
  return LanguageTag(code);
}

std::vector<LanguageTag> ParseLanguageList(std::string_view csv) {
  std::vector<LanguageTag> tags;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string_view item = csv.substr(pos, comma - pos);
    if (!item.empty()) {
      LanguageTag tag(item);
      if (std::find(tags.begin(), tags.end(), tag) != tags.end())
        throw Error("language '" + tag.code() + "' listed twice");
      tags.push_back(std::move(tag));
    }
    pos = comma + 1;
  }
  return tags;
}

std::optional<TaggedPhone> TaggedPhone::TryParse(std::string_view token) {
  std::size_t underscore = token.find('_');
  if (underscore == std::string_view::npos) return std::nullopt;
  auto tag = LanguageTag::TryParse(token.substr(0, underscore));
  std::string_view base = token.substr(underscore + 1);
  if (!tag || base.empty()) return std::nullopt;
  if (std::any_of(base.begin(), base.end(), IsAsciiSpace)) return std::nullopt;
  return TaggedPhone{std::move(*tag), std::string(base)};
}

TaggedPhone TaggedPhone::Parse(std::string_view token) {
  auto phone = TryParse(token);
  if (!phone)
    throw Error("'" + std::string(token) +
                "' is not a language-tagged phone (expected TAG_phone)");
  return std::move(*phone);
}

bool IsSilenceToken(std::string_view token) {
  return IsReserved(token.substr(0, token.find('_')));
}

}  // namespace phonevote
