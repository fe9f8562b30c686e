// phonevote/text.h

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

// Small string helpers shared by the file readers and writers.

#ifndef PHONEVOTE_TEXT_H_
#define PHONEVOTE_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace phonevote {

/// Splits on '\n', stripping a trailing '\r' from each line. A final newline
/// does not produce an extra empty line.
std::vector<std::string_view> SplitLines(std::string_view text);

/// Splits on runs of ASCII whitespace; no empty fields.
std::vector<std::string_view> SplitFields(std::string_view line);

/// Full Unicode lowercasing (root locale). Invalid UTF-8 sequences are
/// replaced by U+FFFD.
std::string ToLowerUtf8(std::string_view text);

/// printf("%.<digits>f"), except that values rounding to zero print without
/// a minus sign.
std::string FormatFixed(double value, int digits);

/// Strict decimal parse of the whole field; false on trailing garbage,
/// NaN or infinity.
bool ParseDouble(std::string_view field, double *out);
bool ParseInt(std::string_view field, long long *out);

}  // namespace phonevote

#endif  // PHONEVOTE_TEXT_H_
