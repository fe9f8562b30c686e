// phonevote/simulator.h

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

// Synthetic decoder output. Stands in for an acoustic model: for every
// utterance it emits a CTM phone stream whose language tags follow a
// configurable phone-level confusion matrix, plus the gold labels.
//
// Each utterance u draws from its own Rng seeded with DeriveSeed(seed, u),
// in this order: phone count; then per phone a silence coin, the emitted
// language, the base phone, and the duration. Times are whole centiseconds
// (one 10 ms frame), so two-decimal CTM output is exact.
//
// Spec file (JSON):
//
//   {
//     "languages": ["AR", "ES", "FR", "TR"],
//     "inventory": {"ES": ["a", "b", ...], ...},
//     "confusion": {"FR": {"FR": 0.4, "ES": 0.6}},   // missing rows: identity
//     "utterances_per_language": 250,
//     "phones_per_utterance": [10, 40],
//     "silence_rate": 0.1,
//     "mean_phone_duration": 0.08,
//     "seed": 0
//   }

#ifndef PHONEVOTE_SIMULATOR_H_
#define PHONEVOTE_SIMULATOR_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phonevote/ctm.h"
#include "phonevote/eval.h"
#include "phonevote/language.h"

namespace phonevote {

struct SimSpec {
  std::vector<LanguageTag> languages;
  std::map<LanguageTag, std::vector<std::string>> inventory;
  /// confusion[true][emitted]; a language without a row emits only itself.
  std::map<LanguageTag, std::map<LanguageTag, double>> confusion;
  int utterances_per_language = 100;
  int min_phones = 10;
  int max_phones = 40;
  double silence_rate = 0.0;
  double mean_phone_duration = 0.08;  // seconds
  std::uint64_t seed = 0;

  /// Throws phonevote::Error naming the violated constraint.
  void Validate() const;

  /// Emission probabilities of `truth`, aligned with `languages`.
  std::vector<double> ConfusionRow(const LanguageTag &truth) const;

  /// Diagonal confusion over the given languages, with a small default
  /// inventory per language.
  static SimSpec Identity(std::vector<LanguageTag> languages);
};

/// Throws phonevote::Error on malformed JSON, unknown keys, or a spec that
/// fails Validate().
SimSpec ParseSimSpec(std::string_view json_text);
std::string WriteSimSpec(const SimSpec &spec);

/// (time, new language) at each gold block boundary.
using SwitchPoints = std::vector<std::pair<double, LanguageTag>>;

struct SimOutput {
  std::vector<CtmRecord> ctm;
  LabelMap gold;
  std::map<std::string, SwitchPoints> switch_gold;  // code-switch runs only
};

/// spec.utterances_per_language utterances for each language, ids
/// "<LANG>-<nnnnn>".
SimOutput Simulate(const SimSpec &spec);

/// spec.utterances_per_language * |languages| utterances, ids "cs-<nnnnn>",
/// each made of `blocks_per_utterance` blocks with distinct consecutive
/// languages. The gold label is the first block's language. Throws with
/// fewer than two blocks or two languages.
SimOutput SimulateCodeswitch(const SimSpec &spec, int blocks_per_utterance);

/// "utt <TAB> time <TAB> LANG" per boundary.
std::string WriteSwitchGold(const std::map<std::string, SwitchPoints> &switches);

}  // namespace phonevote

#endif  // PHONEVOTE_SIMULATOR_H_
