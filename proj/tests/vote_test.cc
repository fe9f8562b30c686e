// tests/vote_test.cc

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

#include "phonevote/vote.h"

#include <gtest/gtest.h>

#include "phonevote/error.h"
#include "phonevote/random.h"

namespace phonevote {
namespace {

const LanguageTag kAR("AR"), kES("ES"), kFR("FR"), kTR("TR");
const std::vector<LanguageTag> kDefaultOrder = {kAR, kES, kFR, kTR};

std::vector<CtmRecord> Utterance(const std::vector<std::string> &tokens,
                                 const std::string &utt = "u") {
  std::vector<CtmRecord> recs;
  for (std::size_t i = 0; i < tokens.size(); ++i)
    recs.push_back({utt, "1", 0.1 * static_cast<double>(i), 0.1, tokens[i], {}});
  return recs;
}

const std::vector<std::string> kBasura = {"ES_b", "ES_a", "FR_s", "FR_u", "ES_r", "AR_a"};

TEST(Tally, BasuraExample) {
  LanguageTally t = Tally(Utterance(kBasura));
  EXPECT_EQ(t, (LanguageTally{{kES, 3}, {kFR, 2}, {kAR, 1}}));
}

TEST(Tally, EmptyAndSilence) {
  EXPECT_TRUE(Tally(Utterance({})).empty());
  EXPECT_EQ(Tally(Utterance({"SIL", "TR_a", "SIL"})), (LanguageTally{{kTR, 1}}));
  EXPECT_THROW(Tally(Utterance({"a"})), Error);
}

TEST(Predict, Examples) {
  EXPECT_EQ(Predict({{kES, 3}, {kFR, 2}, {kAR, 1}}, kDefaultOrder), kES);
  EXPECT_EQ(Predict({{kFR, 5}}, kDefaultOrder), kFR);
  EXPECT_EQ(Predict({{kES, 2}, {kFR, 2}}, kDefaultOrder), kES);
}

TEST(Predict, TieBreakOrderWins) {
  std::vector<LanguageTag> fr_first = {kFR, kES};
  EXPECT_EQ(Predict({{kES, 2}, {kFR, 2}}, fr_first), kFR);
  // Tied languages absent from the list rank after listed ones, then by tag.
  std::vector<LanguageTag> only_tr = {kTR};
  EXPECT_EQ(Predict({{kES, 2}, {kFR, 2}, {kTR, 2}}, only_tr), kTR);
  EXPECT_EQ(Predict({{kFR, 2}, {kES, 2}}, only_tr), kES);
  EXPECT_EQ(Predict({{kFR, 2}, {kES, 2}}, {}), kES);
}

TEST(Predict, EmptyTally) {
  EXPECT_EQ(Predict({}, kDefaultOrder), kAR);
  EXPECT_THROW(Predict({}, {}), Error);
}

TEST(Margin, TopMinusRunnerUp) {
  EXPECT_EQ(Margin({{kES, 3}, {kFR, 2}, {kAR, 1}}), 1);
  EXPECT_EQ(Margin({{kTR, 7}}), 7);
  EXPECT_EQ(Margin({{kES, 2}, {kFR, 2}}), 0);
  EXPECT_EQ(Margin({}), 0);
}

TEST(Identify, BasuraUtteranceIsSpanish) {
  IdentifyResult r = Identify(Utterance(kBasura, "basura"), kDefaultOrder);
  ASSERT_EQ(r.predictions.size(), 1u);
  EXPECT_EQ(r.predictions[0].utterance_id, "basura");
  EXPECT_EQ(r.predictions[0].language, kES);
  EXPECT_EQ(r.predictions[0].margin, 1);
  EXPECT_TRUE(r.failed.empty());
}

TEST(Identify, SingleLanguageMarginIsPhoneCount) {
  IdentifyResult r = Identify(Utterance({"TR_a", "TR_b", "SIL", "TR_c"}), kDefaultOrder);
  ASSERT_EQ(r.predictions.size(), 1u);
  EXPECT_EQ(r.predictions[0].language, kTR);
  EXPECT_EQ(r.predictions[0].margin, 3);
}

TEST(Identify, FailuresDoNotAbortBatch) {
  auto recs = Utterance({"ES_a", "ES_b"}, "good");
  auto bad = Utterance({"ES_a", "oops"}, "bad");
  auto silent = Utterance({"SIL"}, "silent");
  recs.insert(recs.end(), bad.begin(), bad.end());
  recs.insert(recs.end(), silent.begin(), silent.end());

  IdentifyResult r = Identify(recs, kDefaultOrder);
  ASSERT_EQ(r.predictions.size(), 2u);
  EXPECT_EQ(r.predictions[0].utterance_id, "good");
  EXPECT_TRUE(r.predictions[1].no_evidence);
  EXPECT_EQ(r.predictions[1].language, kAR);
  ASSERT_EQ(r.failed.size(), 1u);
  EXPECT_EQ(r.failed[0].first, "bad");

  IdentifyResult strict = Identify(silent, {});
  EXPECT_TRUE(strict.predictions.empty());
  EXPECT_EQ(strict.failed.size(), 1u);
}

TEST(VoteProperties, PermutationAndScalingInvariance) {
  Rng rng(77);
  const std::vector<std::string> codes = {"AR", "ES", "FR", "TR"};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> tokens;
    for (int i = static_cast<int>(rng.UniformInt(1, 25)); i > 0; --i)
      tokens.push_back(rng.Bernoulli(0.1) ? "SIL" : codes[rng.UniformInt(codes.size())] + "_x");
    auto recs = Utterance(tokens);
    LanguageTally base = Tally(recs);

    long long speech = 0;
    for (const auto &t : tokens) speech += t != "SIL";
    long long total = 0;
    for (const auto &[tag, count] : base) total += count;
    EXPECT_EQ(total, speech);

    auto shuffled = recs;
    rng.Shuffle(std::span<CtmRecord>(shuffled));
    EXPECT_EQ(Tally(shuffled), base);
    EXPECT_EQ(Predict(Tally(shuffled), kDefaultOrder), Predict(base, kDefaultOrder));

    auto doubled = recs;
    doubled.insert(doubled.end(), recs.begin(), recs.end());
    doubled.insert(doubled.end(), recs.begin(), recs.end());
    EXPECT_EQ(Predict(Tally(doubled), kDefaultOrder), Predict(base, kDefaultOrder));

    if (!base.empty()) {
      LanguageTag winner = Predict(base, kDefaultOrder);
      for (const auto &[tag, count] : base) EXPECT_LE(count, base.at(winner));
    }
  }
}

TEST(Predictions, FileFormatRoundTrip) {
  IdentifyResult r = Identify(Utterance(kBasura, "basura"), kDefaultOrder);
  std::string text = WritePredictions(r.predictions);
  EXPECT_EQ(text, "basura\tES\t1\t{\"AR\":1,\"ES\":3,\"FR\":2}\n");
  auto back = ReadPredictions(text);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back.at("basura"), kES);
  EXPECT_THROW(ReadPredictions("u\tes\n"), ParseError);
  EXPECT_THROW(ReadPredictions("u\tES\nu\tFR\n"), ParseError);
}

}  // namespace
}  // namespace phonevote
