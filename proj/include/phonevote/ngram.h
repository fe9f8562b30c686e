// phonevote/ngram.h

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

// Backoff n-gram language models: Witten-Bell training, ARPA reading and
// writing, and sentence scoring.
//
// Training uses interpolated Witten-Bell. For a context h with c(h) tokens
// observed after it and T(h) distinct continuation types,
//
//   P(w | h) = (c(h, w) + T(h) * P(w | h')) / (c(h) + T(h))
//
// where h' drops the oldest word of h. The recursion bottoms out in the
// uniform distribution over the vocabulary (every token seen in training,
// plus </s> and <unk>; <s> is never predicted). The result is stored in
// backoff form: each observed n-gram keeps its interpolated probability and
// each observed context keeps bow(h) = T(h) / (c(h) + T(h)), so an unseen
// word costs bow(h) * P(w | h').

#ifndef PHONEVOTE_NGRAM_H_
#define PHONEVOTE_NGRAM_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phonevote/corpus.h"

namespace phonevote {

inline constexpr std::string_view kSentenceStart = "<s>";
inline constexpr std::string_view kSentenceEnd = "</s>";
inline constexpr std::string_view kUnknownWord = "<unk>";
/// ARPA stand-in for log10(0), used for <s>.
inline constexpr double kLogZero = -99.0;

using Ngram = std::vector<std::string>;

struct NgramEntry {
  double logprob = 0.0;            // log10 P(last word | preceding words)
  std::optional<double> backoff;   // log10 bow; absent at the highest order
};

class NgramModel {
 public:
  using Table = std::map<Ngram, NgramEntry>;

  /// tables[n - 1] holds the n-grams. Throws phonevote::Error if a
  /// probability is positive, a highest-order entry carries a backoff
  /// weight, or an n-gram's prefix is missing from the order below.
  explicit NgramModel(std::vector<Table> tables);

  int order() const { return static_cast<int>(tables_.size()); }
  /// n in [1, order()].
  const Table &table(int n) const { return tables_.at(n - 1); }

  /// Unigram tokens, sorted.
  std::vector<std::string> Vocabulary() const;

  /// log10 P(word | history) by backoff; only the last order()-1 history
  /// words matter. Words missing from the unigram table are scored as
  /// <unk>, or as kLogZero when the model has no <unk>.
  double ConditionalLogProb(std::span<const std::string> history,
                            const std::string &word) const;

 private:
  const NgramEntry *Find(std::span<const std::string> ngram) const;
  std::string MapUnknown(const std::string &word) const;

  std::vector<Table> tables_;
};

/// Throws phonevote::Error on an empty corpus or order < 1.
NgramModel TrainNgram(const Corpus &corpus, int order);

/// Standard ARPA text; log values with six decimals, n-grams sorted
/// lexicographically within each section.
std::string WriteArpa(const NgramModel &model);

/// Accepts LF or CRLF and blank lines; text before \data\ is ignored.
/// Throws ParseError with a line number on malformed input.
NgramModel ParseArpa(std::string_view text);

/// Sum of log10 P(token | history) over the tokens and the closing </s>,
/// starting from <s>.
double SentenceLogProb(const NgramModel &model,
                       std::span<const std::string> tokens);

}  // namespace phonevote

#endif  // PHONEVOTE_NGRAM_H_
