// phonevote/language.h

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

#ifndef PHONEVOTE_LANGUAGE_H_
#define PHONEVOTE_LANGUAGE_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phonevote {

/// Short language code such as "ES" or "FR": 2-8 uppercase ASCII letters.
/// The codes SIL, SPN and NSN are reserved for silence/garbage phones.
class LanguageTag {
 public:
  /// Throws phonevote::Error if `code` is not a well-formed tag.
  explicit LanguageTag(std::string_view code);

  static bool IsValid(std::string_view code);
  static std::optional<LanguageTag> TryParse(std::string_view code);

  const std::string &code() const { return code_; }

  friend auto operator<=>(const LanguageTag &, const LanguageTag &) = default;
  friend bool operator==(const LanguageTag &, const LanguageTag &) = default;

 private:
  std::string code_;
};

/// Parses a comma-separated tag list ("AR,ES,FR"). Throws on a bad tag or a
/// repeated tag.
std::vector<LanguageTag> ParseLanguageList(std::string_view csv);

/// A phone symbol carrying the language it was prepended with; serialized as
/// `<code>_<base>` and split on the first underscore when parsed.
struct TaggedPhone {
  LanguageTag language;
  std::string base;

  std::string ToString() const { return language.code() + "_" + base; }

  /// Throws phonevote::Error when `token` is not `<tag>_<base>`.
  static TaggedPhone Parse(std::string_view token);
  static std::optional<TaggedPhone> TryParse(std::string_view token);

  friend bool operator==(const TaggedPhone &, const TaggedPhone &) = default;
  friend auto operator<=>(const TaggedPhone &, const TaggedPhone &) = default;
};

/// True for SIL, SPN, NSN and their word-position variants (SIL_B, ...).
bool IsSilenceToken(std::string_view token);

}  // namespace phonevote

#endif  // PHONEVOTE_LANGUAGE_H_
