// phonevote/cli.h

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

#ifndef PHONEVOTE_CLI_H_
#define PHONEVOTE_CLI_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace phonevote {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

/// Runs the phonevote command line. `args` excludes the program name.
/// Results go to files or `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);

/// Whole file as a string. Throws phonevote::Error if unreadable.
std::string ReadFile(const std::filesystem::path &path);

/// Writes through a temporary file in the same directory and renames it
/// into place.
void WriteFileAtomic(const std::filesystem::path &path, std::string_view content);

}  // namespace phonevote

#endif  // PHONEVOTE_CLI_H_
