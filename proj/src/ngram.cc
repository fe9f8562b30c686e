// src/ngram.cc

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

#include "phonevote/ngram.h"

#include <algorithm>
#include <cmath>

#include "phonevote/error.h"

namespace phonevote {

namespace {

std::string JoinNgram(const Ngram &ngram) {
  std::string s;
  for (const std::string &w : ngram) {
    if (!s.empty()) s += ' ';
    s += w;
  }
  return s;
}

struct ContextStats {
  long long total = 0;  // c(h): tokens observed after h
  long long types = 0;  // T(h): distinct words observed after h
};

}  // namespace

NgramModel::NgramModel(std::vector<Table> tables) : tables_(std::move(tables)) {
  if (tables_.empty()) throw Error("n-gram model needs at least one order");
  for (int n = 1; n <= order(); ++n) {
    for (const auto &[ngram, entry] : table(n)) {
      if (static_cast<int>(ngram.size()) != n)
        throw Error("n-gram '" + JoinNgram(ngram) + "' filed under order " +
                    std::to_string(n));
      if (!(entry.logprob <= 0.0))
        throw Error("n-gram '" + JoinNgram(ngram) +
                    "' has a positive log probability");
      if (n == order() && entry.backoff)
        throw Error("highest-order n-gram '" + JoinNgram(ngram) +
                    "' carries a backoff weight");
      if (n > 1) {
        Ngram prefix(ngram.begin(), ngram.end() - 1);
        if (!table(n - 1).contains(prefix))
          throw Error("prefix of n-gram '" + JoinNgram(ngram) + "' is missing");
      }
    }
  }
}

std::vector<std::string> NgramModel::Vocabulary() const {
  std::vector<std::string> vocab;
  for (const auto &[ngram, entry] : table(1)) vocab.push_back(ngram.front());
  return vocab;
}

const NgramEntry *NgramModel::Find(std::span<const std::string> ngram) const {
  if (ngram.empty() || static_cast<int>(ngram.size()) > order()) return nullptr;
  const Table &t = tables_[ngram.size() - 1];
  auto it = t.find(Ngram(ngram.begin(), ngram.end()));
  return it == t.end() ? nullptr : &it->second;
}

std::string NgramModel::MapUnknown(const std::string &word) const {
  if (table(1).contains(Ngram{word})) return word;
  return std::string(kUnknownWord);
}

double NgramModel::ConditionalLogProb(std::span<const std::string> history,
                                      const std::string &word) const {
  std::size_t keep = std::min<std::size_t>(history.size(), order() - 1);
  Ngram ngram;
  for (std::size_t i = history.size() - keep; i < history.size(); ++i)
    ngram.push_back(MapUnknown(history[i]));
  ngram.push_back(MapUnknown(word));

  // Back off from the longest history until the n-gram is found, adding the
  // backoff weight of each context we pass through.
  double backoff = 0.0;
  std::span<const std::string> view(ngram);
  while (!view.empty()) {
    if (const NgramEntry *hit = Find(view)) return backoff + hit->logprob;
    if (view.size() == 1) break;
    const NgramEntry *context = Find(view.first(view.size() - 1));
    if (context && context->backoff) backoff += *context->backoff;
    view = view.subspan(1);
  }
  return kLogZero;  // word is not even a unigram and there is no <unk>
}

NgramModel TrainNgram(const Corpus &corpus, int order) {
  if (order < 1) throw Error("n-gram order must be >= 1");
  if (corpus.empty()) throw Error("cannot train a language model on an empty corpus");

  // counts[n - 1][ngram] = occurrences in the padded sentences. <s> is never
  // counted as a predicted word.
  std::vector<std::map<Ngram, long long>> counts(order);
  for (const auto &line : corpus.lines) {
    std::vector<std::string> padded;
    padded.reserve(line.size() + 2);
    padded.emplace_back(kSentenceStart);
    padded.insert(padded.end(), line.begin(), line.end());
    padded.emplace_back(kSentenceEnd);
    for (std::size_t end = 1; end < padded.size(); ++end)
      for (int n = 1; n <= order && static_cast<std::size_t>(n) <= end + 1; ++n)
        ++counts[n - 1][Ngram(padded.begin() + (end + 1 - n),
                              padded.begin() + (end + 1))];
  }

  std::vector<NgramModel::Table> tables(order);

  // Unigrams, interpolated with the uniform distribution over the vocabulary.
  std::map<Ngram, long long> &unigrams = counts[0];
  unigrams.try_emplace(Ngram{std::string(kUnknownWord)}, 0);
  long long total = 0, types = 0;
  for (const auto &[w, c] : unigrams) {
    total += c;
    if (c > 0) ++types;
  }
  const double uniform = 1.0 / static_cast<double>(unigrams.size());
  const double denom = static_cast<double>(total + types);
  for (const auto &[w, c] : unigrams)
    tables[0][w].logprob =
        std::log10((static_cast<double>(c) + types * uniform) / denom);
  tables[0][Ngram{std::string(kSentenceStart)}].logprob = kLogZero;

  for (int n = 2; n <= order; ++n) {
    std::map<Ngram, ContextStats> contexts;
    for (const auto &[ngram, c] : counts[n - 1]) {
      ContextStats &stats = contexts[Ngram(ngram.begin(), ngram.end() - 1)];
      stats.total += c;
      ++stats.types;
    }
    for (const auto &[ngram, c] : counts[n - 1]) {
      const ContextStats &stats =
          contexts.at(Ngram(ngram.begin(), ngram.end() - 1));
      // Every suffix of an observed n-gram was observed too.
      double lower = std::pow(
          10.0, tables[n - 2].at(Ngram(ngram.begin() + 1, ngram.end())).logprob);
      tables[n - 1][ngram].logprob =
          std::log10((static_cast<double>(c) + stats.types * lower) /
                     static_cast<double>(stats.total + stats.types));
    }
    for (const auto &[context, stats] : contexts)
      tables[n - 2].at(context).backoff = std::log10(
          static_cast<double>(stats.types) /
          static_cast<double>(stats.total + stats.types));
  }
  return NgramModel(std::move(tables));
}

double SentenceLogProb(const NgramModel &model,
                       std::span<const std::string> tokens) {
  std::vector<std::string> padded;
  padded.reserve(tokens.size() + 2);
  padded.emplace_back(kSentenceStart);
  padded.insert(padded.end(), tokens.begin(), tokens.end());
  padded.emplace_back(kSentenceEnd);

  double total = 0.0;
  std::span<const std::string> all(padded);
  for (std::size_t i = 1; i < padded.size(); ++i)
    total += model.ConditionalLogProb(all.first(i), padded[i]);
  return total;
}

}  // namespace phonevote
