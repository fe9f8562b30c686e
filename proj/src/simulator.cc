// src/simulator.cc

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

#include "phonevote/simulator.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

#include "json.hpp"
#include "phonevote/error.h"
#include "phonevote/random.h"
#include "phonevote/text.h"

namespace phonevote {

namespace {

constexpr double kRowTolerance = 1e-9;

std::string UtteranceId(std::string_view prefix, std::size_t n) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "-%05zu", n);
  return std::string(prefix) + buf;
}

double Seconds(long long centiseconds) {
  return static_cast<double>(centiseconds) / 100.0;
}

// Emits phones for one stretch of speech in language `truth`, advancing
// `clock` (centiseconds). Returns the start time of the first non-silence
// phone.
class UtteranceWriter {
 public:
  UtteranceWriter(const SimSpec &spec, std::string utt, Rng *rng,
                  std::vector<CtmRecord> *out)
      : spec_(spec), utt_(std::move(utt)), rng_(rng), out_(out) {}

  long long EmitBlock(const LanguageTag &truth, long long phones) {
    std::vector<double> row = spec_.ConfusionRow(truth);
    long long first_speech = -1;
    for (long long i = 0; i < phones; ++i) {
      if (rng_->Bernoulli(spec_.silence_rate)) Emit("SIL");
      const LanguageTag &emitted = spec_.languages[rng_->Categorical(row)];
      const auto &symbols = spec_.inventory.at(emitted);
      const std::string &base = symbols[rng_->UniformInt(symbols.size())];
      if (first_speech < 0) first_speech = clock_;
      Emit(TaggedPhone{emitted, base}.ToString());
    }
    return first_speech;
  }

 private:
  void Emit(std::string token) {
    long long duration = DrawDuration();
    out_->push_back(
        {utt_, "1", Seconds(clock_), Seconds(duration), std::move(token), {}});
    clock_ += duration;
  }

  // Uniform in [0.5, 1.5] * mean, rounded to whole centiseconds, at least 1.
  long long DrawDuration() {
    double seconds = (0.5 + rng_->UniformReal()) * spec_.mean_phone_duration;
    return std::max<long long>(1, std::llround(seconds * 100.0));
  }

  const SimSpec &spec_;
  std::string utt_;
  Rng *rng_;
  std::vector<CtmRecord> *out_;
  long long clock_ = 0;
};

}  // namespace

void SimSpec::Validate() const {
  if (languages.empty()) throw Error("sim spec: no languages");
  std::set<LanguageTag> known(languages.begin(), languages.end());
  if (known.size() != languages.size()) throw Error("sim spec: repeated language");
  for (const LanguageTag &tag : languages) {
    auto it = inventory.find(tag);
    if (it == inventory.end() || it->second.empty())
      throw Error("sim spec: empty phone inventory for " + tag.code());
    for (const std::string &base : it->second)
      if (!TaggedPhone::TryParse(tag.code() + "_" + base))
        throw Error("sim spec: bad phone symbol '" + base + "' for " + tag.code());
  }
  for (const auto &[truth, row] : confusion) {
    if (!known.contains(truth))
      throw Error("sim spec: confusion row for unknown language " + truth.code());
    double sum = 0.0;
    for (const auto &[emitted, p] : row) {
      if (!known.contains(emitted))
        throw Error("sim spec: confusion entry for unknown language " +
                    emitted.code());
      if (!(p >= 0.0 && p <= 1.0))
        throw Error("sim spec: confusion probability outside [0, 1] in row " +
                    truth.code());
      sum += p;
    }
    if (std::abs(sum - 1.0) > kRowTolerance)
      throw Error("sim spec: confusion row " + truth.code() + " sums to " +
                  FormatFixed(sum, 12) + ", not 1");
  }
  if (utterances_per_language < 0)
    throw Error("sim spec: utterances_per_language must be >= 0");
  if (min_phones < 1 || min_phones > max_phones)
    throw Error("sim spec: phones_per_utterance needs 1 <= min <= max");
  if (!(silence_rate >= 0.0 && silence_rate < 1.0))
    throw Error("sim spec: silence_rate must be in [0, 1)");
  if (!(mean_phone_duration >= 0.01 && mean_phone_duration <= 10.0))
    throw Error("sim spec: mean_phone_duration must be in [0.01, 10] seconds");
}

std::vector<double> SimSpec::ConfusionRow(const LanguageTag &truth) const {
  std::vector<double> row(languages.size(), 0.0);
  auto it = confusion.find(truth);
  for (std::size_t i = 0; i < languages.size(); ++i) {
    if (it == confusion.end()) {
      row[i] = languages[i] == truth ? 1.0 : 0.0;
    } else {
      auto cell = it->second.find(languages[i]);
      row[i] = cell == it->second.end() ? 0.0 : cell->second;
    }
  }
  return row;
}

SimSpec SimSpec::Identity(std::vector<LanguageTag> languages) {
  SimSpec spec;
  for (const LanguageTag &tag : languages)
    spec.inventory[tag] = {"a", "b", "d", "e", "i", "k", "l", "m",
                           "n", "o", "p", "r", "s", "t", "u"};
  spec.languages = std::move(languages);
  return spec;
}

SimSpec ParseSimSpec(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error &e) {
    throw Error(std::string("sim spec: ") + e.what());
  }
  if (!j.is_object()) throw Error("sim spec: top level must be a JSON object");

  static const std::set<std::string> kKeys = {
      "languages",    "inventory",   "confusion",           "utterances_per_language",
      "phones_per_utterance", "silence_rate", "mean_phone_duration", "seed"};
  for (const auto &[key, value] : j.items())
    if (!kKeys.contains(key)) throw Error("sim spec: unknown key '" + key + "'");

  SimSpec spec;
  try {
    for (const auto &code : j.at("languages"))
      spec.languages.emplace_back(code.get<std::string>());
    for (const auto &[code, symbols] : j.at("inventory").items())
      spec.inventory[LanguageTag(code)] = symbols.get<std::vector<std::string>>();
    if (j.contains("confusion"))
      for (const auto &[truth, row] : j["confusion"].items())
        for (const auto &[emitted, p] : row.items())
          spec.confusion[LanguageTag(truth)][LanguageTag(emitted)] = p.get<double>();
    if (j.contains("utterances_per_language"))
      spec.utterances_per_language = j["utterances_per_language"].get<int>();
    if (j.contains("phones_per_utterance")) {
      auto range = j["phones_per_utterance"].get<std::vector<int>>();
      if (range.size() != 2)
        throw Error("sim spec: phones_per_utterance must be [min, max]");
      spec.min_phones = range[0];
      spec.max_phones = range[1];
    }
    if (j.contains("silence_rate")) spec.silence_rate = j["silence_rate"].get<double>();
    if (j.contains("mean_phone_duration"))
      spec.mean_phone_duration = j["mean_phone_duration"].get<double>();
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception &e) {
    throw Error(std::string("sim spec: ") + e.what());
  }
  spec.Validate();
  return spec;
}

std::string WriteSimSpec(const SimSpec &spec) {
  nlohmann::ordered_json j;
  std::vector<std::string> codes;
  for (const auto &tag : spec.languages) codes.push_back(tag.code());
  j["languages"] = codes;
  nlohmann::ordered_json inventory = nlohmann::ordered_json::object();
  for (const auto &[tag, symbols] : spec.inventory) inventory[tag.code()] = symbols;
  j["inventory"] = inventory;
  nlohmann::ordered_json confusion = nlohmann::ordered_json::object();
  for (const auto &[truth, row] : spec.confusion)
    for (const auto &[emitted, p] : row) confusion[truth.code()][emitted.code()] = p;
  j["confusion"] = confusion;
  j["utterances_per_language"] = spec.utterances_per_language;
  j["phones_per_utterance"] = {spec.min_phones, spec.max_phones};
  j["silence_rate"] = spec.silence_rate;
  j["mean_phone_duration"] = spec.mean_phone_duration;
  j["seed"] = spec.seed;
  return j.dump(2) + "\n";
}

SimOutput Simulate(const SimSpec &spec) {
  spec.Validate();
  SimOutput out;
  std::size_t stream = 0;
  for (const LanguageTag &truth : spec.languages) {
    for (int u = 0; u < spec.utterances_per_language; ++u, ++stream) {
      std::string utt = UtteranceId(truth.code(), static_cast<std::size_t>(u));
      Rng rng(DeriveSeed(spec.seed, stream));
      UtteranceWriter writer(spec, utt, &rng, &out.ctm);
      writer.EmitBlock(truth, rng.UniformInt(spec.min_phones, spec.max_phones));
      out.gold.emplace(std::move(utt), truth);
    }
  }
  return out;
}

SimOutput SimulateCodeswitch(const SimSpec &spec, int blocks_per_utterance) {
  spec.Validate();
  if (blocks_per_utterance < 2)
    throw Error("code-switch simulation needs at least 2 blocks per utterance");
  if (spec.languages.size() < 2)
    throw Error("code-switch simulation needs at least 2 languages");

  SimOutput out;
  const std::size_t n_langs = spec.languages.size();
  const std::size_t total = static_cast<std::size_t>(spec.utterances_per_language) * n_langs;
  for (std::size_t u = 0; u < total; ++u) {
    std::string utt = UtteranceId("cs", u);
    Rng rng(DeriveSeed(spec.seed, u));
    UtteranceWriter writer(spec, utt, &rng, &out.ctm);
    SwitchPoints switches;
    std::size_t lang = rng.UniformInt(n_langs);
    out.gold.emplace(utt, spec.languages[lang]);
    for (int b = 0; b < blocks_per_utterance; ++b) {
      if (b > 0) {
        // Uniform over the other languages.
        std::size_t next = rng.UniformInt(n_langs - 1);
        lang = next >= lang ? next + 1 : next;
      }
      long long phones = rng.UniformInt(spec.min_phones, spec.max_phones);
      long long first = writer.EmitBlock(spec.languages[lang], phones);
      if (b > 0) switches.emplace_back(Seconds(first), spec.languages[lang]);
    }
    out.switch_gold.emplace(std::move(utt), std::move(switches));
  }
  return out;
}

std::string WriteSwitchGold(const std::map<std::string, SwitchPoints> &switches) {
  std::string out;
  for (const auto &[utt, points] : switches)
    for (const auto &[time, tag] : points)
      out += utt + '\t' + FormatFixed(time, 2) + '\t' + tag.code() + '\n';
  return out;
}

}  // namespace phonevote
