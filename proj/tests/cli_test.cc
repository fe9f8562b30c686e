// tests/cli_test.cc

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

#include "phonevote/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "phonevote/lexicon.h"
#include "phonevote/ngram.h"
#include "phonevote/simulator.h"

namespace phonevote {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto *info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() /
           ("phonevote_cli_" + std::string(info->name()) + "_" +
            std::to_string(::getpid()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string &name) const { return (dir_ / name).string(); }

  std::string Put(const std::string &name, const std::string &content) {
    WriteFileAtomic(dir_ / name, content);
    return Path(name);
  }

  int Run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = RunCli(args, out, err);
    out_ = out.str();
    err_ = err.str();
    return code;
  }

  std::string SmallSpec() {
    SimSpec spec = SimSpec::Identity({LanguageTag("AR"), LanguageTag("ES"),
                                      LanguageTag("FR"), LanguageTag("TR")});
    spec.utterances_per_language = 20;
    spec.silence_rate = 0.1;
    spec.seed = 8;
    return Put("spec.json", WriteSimSpec(spec));
  }

  fs::path dir_;
  std::string out_, err_;
};

const char kBasuraCtm[] =
    "basura 1 0.00 0.08 ES_b\n"
    "basura 1 0.08 0.07 ES_a\n"
    "basura 1 0.15 0.06 FR_s\n"
    "basura 1 0.21 0.09 FR_u\n"
    "basura 1 0.30 0.05 ES_r\n"
    "basura 1 0.35 0.10 AR_a\n";

TEST_F(CliTest, IdentifyBasura) {
  std::string ctm = Put("a.ctm", kBasuraCtm);
  ASSERT_EQ(Run({"identify", "--ctm", ctm, "--languages", "AR,ES,FR,TR"}), kExitOk) << err_;
  EXPECT_EQ(out_, "basura\tES\t1\t{\"AR\":1,\"ES\":3,\"FR\":2}\n");

  ASSERT_EQ(Run({"identify", "--ctm", ctm, "--languages", "AR,ES,FR,TR", "--json",
                 "-o", Path("p.json")}),
            kExitOk);
  EXPECT_NE(ReadFile(Path("p.json")).find("\"language\": \"ES\""), std::string::npos);
}

TEST_F(CliTest, IdentifyNumericCtmWithPhoneTable) {
  std::string phones = Put("phones.txt", "<eps> 0\nSIL 1\nES_b 2\nES_a 3\nFR_s 4\n");
  std::string ctm = Put("n.ctm", "u 1 0.00 0.10 2\nu 1 0.10 0.10 1\nu 1 0.20 0.10 3\nu 1 0.30 0.10 4\n");
  ASSERT_EQ(Run({"identify", "--ctm", ctm, "--phones", phones, "--languages", "ES,FR"}),
            kExitOk) << err_;
  EXPECT_EQ(out_.substr(0, 5), "u\tES\t");

  std::string bad = Put("bad.ctm", "u 1 0.00 0.10 9\n");
  EXPECT_EQ(Run({"identify", "--ctm", bad, "--phones", phones, "--languages", "ES"}),
            kExitDataError);
  EXPECT_NE(err_.find("'9'"), std::string::npos) << err_;
}

TEST_F(CliTest, ExitCodes) {
  std::string ctm = Put("a.ctm", kBasuraCtm);
  EXPECT_EQ(Run({}), kExitUsage);
  EXPECT_EQ(Run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(Run({"identify", "--ctm", ctm}), kExitUsage);
  EXPECT_EQ(Run({"identify", "--ctm", Path("missing.ctm"), "--languages", "ES"}), kExitUsage);
  EXPECT_EQ(Run({"identify", "--ctm", ctm, "--languages", "es"}), kExitUsage);
  EXPECT_EQ(Run({"identify", "--ctm", ctm, "--languages", "ES,ES"}), kExitUsage);
  EXPECT_EQ(Run({"codeswitch", "--ctm", ctm, "--threshold", "x"}), kExitUsage);
  EXPECT_EQ(Run({"--help"}), kExitOk);
  EXPECT_NE(out_.find("identify"), std::string::npos);

  std::string broken = Put("broken.ctm", "u 1 0.00\n");
  EXPECT_EQ(Run({"identify", "--ctm", broken, "--languages", "ES"}), kExitDataError);
  EXPECT_NE(err_.find("line 1"), std::string::npos) << err_;
}

TEST_F(CliTest, ScoreIdenticalFilesIsPerfect) {
  std::string gold = Put("gold.tsv", "u1\tES\nu2\tFR\n");
  std::string pred = Put("pred.tsv", "u1\tES\t3\t{}\nu2\tFR\t1\t{}\n");
  ASSERT_EQ(Run({"score", "--predictions", pred, "--gold", gold, "--languages", "ES,FR"}),
            kExitOk) << err_;
  EXPECT_NE(out_.find("overall 100.00%"), std::string::npos) << out_;

  ASSERT_EQ(Run({"score", "--predictions", gold, "--gold", gold, "--languages", "ES,FR",
                 "--json"}),
            kExitOk);
  EXPECT_NE(out_.find("\"overall_accuracy\": 1.0"), std::string::npos) << out_;

  // A gold language outside the closed set is a data error.
  EXPECT_EQ(Run({"score", "--predictions", pred, "--gold", gold, "--languages", "ES"}),
            kExitDataError);
  std::string other = Put("other.tsv", "zz\tES\n");
  EXPECT_EQ(Run({"score", "--predictions", other, "--gold", gold, "--languages", "ES,FR"}),
            kExitDataError);
}

TEST_F(CliTest, Codeswitch) {
  std::string ctm;
  const char *langs[] = {"ES", "ES", "ES", "FR", "ES", "ES", "FR", "FR", "FR", "FR"};
  for (int i = 0; i < 10; ++i)
    ctm += "cs 1 " + std::to_string(i) + ".00 1.00 " + langs[i] + "_a\n";
  std::string path = Put("cs.ctm", ctm);
  ASSERT_EQ(Run({"codeswitch", "--ctm", path}), kExitOk) << err_;
  EXPECT_EQ(out_,
            "utterance\tcs\n"
            "segment\t0.00\t6.00\tES\t6\n"
            "switch\t6.00\tES->FR\n"
            "segment\t6.00\t10.00\tFR\t4\n");
  ASSERT_EQ(Run({"codeswitch", "--ctm", path, "--threshold", "5"}), kExitOk);
  EXPECT_EQ(out_.find("switch"), std::string::npos);
  ASSERT_EQ(Run({"codeswitch", "--ctm", path, "--json"}), kExitOk);
  EXPECT_NE(out_.find("\"cs\""), std::string::npos);
  EXPECT_EQ(Run({"codeswitch", "--ctm", path, "--threshold", "0"}), kExitUsage);
}

TEST_F(CliTest, LexiconAndLm) {
  std::string es_lex = Put("es.lex", "mesa  m e s a\nde  d e\n");
  std::string fr_lex = Put("fr.lex", "de  d @\nle  l @\n");
  std::string es_txt = Put("es.txt", "La mesa de madera.\nde de\n");
  std::string fr_txt = Put("fr.txt", "le chat de la maison\n");
  ASSERT_EQ(Run({"lexicon", "--part", "ES:" + es_lex + ":" + es_txt, "--part",
                 "FR:" + fr_lex, "--top-k", "1", "-o", Path("merged.lex")}),
            kExitOk) << err_;
  Lexicon merged = ReadTaggedLexicon(ReadFile(Path("merged.lex")));
  // top-1 of the Spanish corpus is "de"; French keeps both words.
  EXPECT_EQ(merged.size(), 3u);
  std::string text = ReadFile(Path("merged.lex"));
  EXPECT_NE(text.find("de(2)  FR_d FR_@"), std::string::npos) << text;

  ASSERT_EQ(Run({"lm", "--corpus", "ES:" + es_txt, "--corpus", "FR:" + fr_txt, "--order", "3",
                 "--seed", "4", "-o", Path("lm.arpa"), "--corpus-out", Path("corpus.txt")}),
            kExitOk) << err_;
  NgramModel lm = ParseArpa(ReadFile(Path("lm.arpa")));
  EXPECT_EQ(lm.order(), 3);
  EXPECT_EQ(ReadFile(Path("corpus.txt")).size(), std::string("la mesa de madera\nde de\nle chat de la maison\n").size());

  EXPECT_EQ(Run({"lexicon", "--part", "es:" + es_lex}), kExitUsage);
  EXPECT_EQ(Run({"lexicon", "--part", "ES"}), kExitUsage);
  EXPECT_EQ(Run({"lm", "--corpus", "ES:" + es_txt, "--order", "0"}), kExitUsage);
}

TEST_F(CliTest, SimulateWritesArtifacts) {
  std::string spec = SmallSpec();
  ASSERT_EQ(Run({"simulate", "--spec", spec, "--ctm", Path("s.ctm"), "--gold", Path("g.tsv")}),
            kExitOk) << err_;
  EXPECT_FALSE(ReadFile(Path("s.ctm")).empty());
  EXPECT_EQ(ReadFile(Path("g.tsv")).find("AR-00000\tAR\n"), 0u);

  ASSERT_EQ(Run({"simulate", "--spec", spec, "--ctm", Path("c.ctm"), "--gold", Path("cg.tsv"),
                 "--codeswitch-blocks", "2", "--switches", Path("sw.tsv")}),
            kExitOk) << err_;
  EXPECT_EQ(ReadFile(Path("sw.tsv")).find("cs-00000\t"), 0u);

  std::string bad = Put("bad.json", "{\"languages\": [\"ES\"], \"inventory\": {}}");
  EXPECT_EQ(Run({"simulate", "--spec", bad, "--ctm", Path("x"), "--gold", Path("y")}),
            kExitDataError);
}

TEST_F(CliTest, PipelineIdentityIsPerfect) {
  std::string spec = SmallSpec();
  ASSERT_EQ(Run({"pipeline", "--spec", spec, "--out-dir", Path("run")}), kExitOk) << err_;
  EXPECT_NE(out_.find("overall 100.00% (80/80)"), std::string::npos) << out_;
  for (const char *name : {"sim.ctm", "gold.tsv", "predictions.tsv", "report.txt", "report.json"})
    EXPECT_TRUE(fs::exists(dir_ / "run" / name)) << name;
}

TEST_F(CliTest, PipelineEqualsManualChain) {
  std::string spec = SmallSpec();
  ASSERT_EQ(Run({"pipeline", "--spec", spec, "--out-dir", Path("run")}), kExitOk);
  ASSERT_EQ(Run({"simulate", "--spec", spec, "--ctm", Path("m.ctm"), "--gold", Path("m.tsv")}),
            kExitOk);
  ASSERT_EQ(Run({"identify", "--ctm", Path("m.ctm"), "--languages", "AR,ES,FR,TR", "-o",
                 Path("m.pred")}),
            kExitOk);
  ASSERT_EQ(Run({"score", "--predictions", Path("m.pred"), "--gold", Path("m.tsv"),
                 "--languages", "AR,ES,FR,TR", "-o", Path("m.txt")}),
            kExitOk);
  EXPECT_EQ(ReadFile(Path("m.ctm")), ReadFile(Path("run/sim.ctm")));
  EXPECT_EQ(ReadFile(Path("m.pred")), ReadFile(Path("run/predictions.tsv")));
  EXPECT_EQ(ReadFile(Path("m.txt")), ReadFile(Path("run/report.txt")));
}

TEST_F(CliTest, PipelineSeedOverride) {
  std::string spec = SmallSpec();
  ASSERT_EQ(Run({"pipeline", "--spec", spec, "--out-dir", Path("a"), "--seed", "1"}), kExitOk);
  ASSERT_EQ(Run({"pipeline", "--spec", spec, "--out-dir", Path("b"), "--seed", "1"}), kExitOk);
  ASSERT_EQ(Run({"pipeline", "--spec", spec, "--out-dir", Path("c"), "--seed", "2"}), kExitOk);
  EXPECT_EQ(ReadFile(Path("a/sim.ctm")), ReadFile(Path("b/sim.ctm")));
  EXPECT_NE(ReadFile(Path("a/sim.ctm")), ReadFile(Path("c/sim.ctm")));
}

}  // namespace
}  // namespace phonevote
