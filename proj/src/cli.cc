// src/cli.cc

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

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "phonevote/codeswitch.h"
#include "phonevote/corpus.h"
#include "phonevote/ctm.h"
#include "phonevote/error.h"
#include "phonevote/eval.h"
#include "phonevote/lexicon.h"
#include "phonevote/ngram.h"
#include "phonevote/simulator.h"
#include "phonevote/text.h"
#include "phonevote/vote.h"

namespace phonevote {

namespace fs = std::filesystem;

std::string ReadFile(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteFileAtomic(const fs::path &path, std::string_view content) {
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw Error("error writing " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot rename into " + path.string());
  }
}

namespace {

// Bad flags, missing input files and similar invocation problems.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadInput(const std::string &path) {
  if (!fs::is_regular_file(path)) throw UsageError("no such file: " + path);
  return ReadFile(path);
}

// Writes to `path`, or to `out` when the path is empty or "-".
void Emit(const std::string &path, std::string_view content, std::ostream &out) {
  if (path.empty() || path == "-")
    out << content;
  else
    WriteFileAtomic(path, content);
}

// "ES:lexicon.txt[:corpus.txt]"
struct PartSpec {
  LanguageTag language;
  std::string first;
  std::string second;
};

PartSpec ParsePartSpec(const std::string &arg, bool allow_second) {
  std::vector<std::string> pieces;
  std::size_t pos = 0;
  for (;;) {
    std::size_t colon = arg.find(':', pos);
    pieces.push_back(arg.substr(pos, colon - pos));
    if (colon == std::string::npos) break;
    pos = colon + 1;
  }
  if (pieces.size() < 2 || pieces.size() > (allow_second ? 3u : 2u) ||
      pieces[1].empty())
    throw UsageError("malformed argument '" + arg + "'");
  auto tag = LanguageTag::TryParse(pieces[0]);
  if (!tag) throw UsageError("bad language tag in '" + arg + "'");
  return {*tag, pieces[1], pieces.size() == 3 ? pieces[2] : std::string()};
}

std::vector<std::string> RawLines(std::string_view text) {
  std::vector<std::string> lines;
  for (std::string_view line : SplitLines(text)) lines.emplace_back(line);
  return lines;
}

std::vector<LanguageTag> LanguagesFlag(const std::string &csv) {
  try {
    auto tags = ParseLanguageList(csv);
    if (tags.empty()) throw UsageError("--languages must name at least one language");
    return tags;
  } catch (const Error &e) {
    throw UsageError(std::string("--languages: ") + e.what());
  }
}

std::vector<CtmRecord> LoadCtm(const std::string &ctm_path,
                               const std::string &phones_path) {
  std::vector<CtmRecord> records = ParseCtm(ReadInput(ctm_path));
  if (!phones_path.empty())
    records = MapPhoneIds(records, ParsePhoneTable(ReadInput(phones_path)));
  return records;
}

std::string PredictionsJson(const IdentifyResult &result) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Prediction &p : result.predictions) {
    nlohmann::ordered_json tally = nlohmann::ordered_json::object();
    for (const auto &[tag, count] : p.tally) tally[tag.code()] = count;
    arr.push_back({{"utterance", p.utterance_id},
                   {"language", p.language.code()},
                   {"margin", p.margin},
                   {"tally", tally},
                   {"no_evidence", p.no_evidence}});
  }
  return arr.dump(2) + "\n";
}

void ReportFailures(const IdentifyResult &result, std::ostream &err) {
  for (const auto &[utt, reason] : result.failed)
    err << "warning: utterance " << utt << " not identified: " << reason << "\n";
  for (const Prediction &p : result.predictions)
    if (p.no_evidence)
      err << "warning: utterance " << p.utterance_id
          << " has no tagged phones; defaulted to " << p.language.code() << "\n";
}

void CheckClosedSet(const LabelMap &gold, const std::vector<LanguageTag> &languages) {
  for (const auto &[utt, tag] : gold)
    if (std::find(languages.begin(), languages.end(), tag) == languages.end())
      throw Error("gold label " + tag.code() + " of utterance " + utt +
                  " is not in --languages");
}

SimSpec LoadSimSpec(const std::string &path, std::optional<std::uint64_t> seed) {
  SimSpec spec = ParseSimSpec(ReadInput(path));
  if (seed) spec.seed = *seed;
  return spec;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Spoken language identification by phone vote", "phonevote"};
  app.require_subcommand(1);

  // lexicon
  std::vector<std::string> lex_parts;
  std::size_t top_k = 2000;
  std::string lex_out;
  auto *lexicon = app.add_subcommand(
      "lexicon", "Tag, filter and merge per-language pronunciation lexicons");
  lexicon->add_option("--part", lex_parts,
                      "TAG:LEXICON[:CORPUS]; with a corpus the lexicon is "
                      "filtered to its --top-k most frequent words")
      ->required();
  lexicon->add_option("--top-k", top_k, "Words kept per language")
      ->capture_default_str();
  lexicon->add_option("-o,--output", lex_out, "Merged lexicon (default stdout)");

  // lm
  std::vector<std::string> lm_parts;
  int order = 4;
  std::uint64_t lm_seed = 0;
  std::string lm_out, corpus_out;
  auto *lm = app.add_subcommand("lm", "Build a multilingual ARPA n-gram model");
  lm->add_option("--corpus", lm_parts, "TAG:TRANSCRIPTS, one sentence per line")
      ->required();
  lm->add_option("--order", order, "n-gram order")->capture_default_str()
      ->check(CLI::Range(1, 10));
  lm->add_option("--seed", lm_seed, "Corpus shuffle seed")->capture_default_str();
  lm->add_option("-o,--output", lm_out, "ARPA file (default stdout)");
  lm->add_option("--corpus-out", corpus_out, "Also write the shuffled corpus");

  // identify
  std::string id_ctm, id_phones, id_langs, id_out;
  bool id_json = false;
  auto *identify = app.add_subcommand("identify", "Predict utterance languages by phone vote");
  identify->add_option("--ctm", id_ctm, "Phone CTM")->required()->check(CLI::ExistingFile);
  identify->add_option("--phones", id_phones, "phones.txt for numeric CTM tokens")
      ->check(CLI::ExistingFile);
  identify->add_option("--languages", id_langs, "Comma-separated tags; order breaks ties")
      ->required();
  identify->add_option("-o,--output", id_out, "Predictions (default stdout)");
  identify->add_flag("--json", id_json, "JSON output");

  // codeswitch
  std::string cs_ctm, cs_phones, cs_out;
  int threshold = kDefaultSwitchThreshold;
  bool cs_json = false;
  auto *codeswitch = app.add_subcommand("codeswitch", "Detect language switches within utterances");
  codeswitch->add_option("--ctm", cs_ctm, "Phone CTM")->required()->check(CLI::ExistingFile);
  codeswitch->add_option("--phones", cs_phones, "phones.txt for numeric CTM tokens")
      ->check(CLI::ExistingFile);
  codeswitch->add_option("--threshold", threshold, "Foreign-run length that triggers a switch")
      ->capture_default_str()->check(CLI::PositiveNumber);
  codeswitch->add_option("-o,--output", cs_out, "Report (default stdout)");
  codeswitch->add_flag("--json", cs_json, "JSON output");

  // score
  std::string sc_pred, sc_gold, sc_langs, sc_out;
  bool sc_json = false;
  auto *score = app.add_subcommand("score", "Score predictions against gold labels");
  score->add_option("--predictions", sc_pred, "Predictions file")->required()
      ->check(CLI::ExistingFile);
  score->add_option("--gold", sc_gold, "Gold labels file")->required()->check(CLI::ExistingFile);
  score->add_option("--languages", sc_langs, "Comma-separated closed language set")->required();
  score->add_option("-o,--output", sc_out, "Report (default stdout)");
  score->add_flag("--json", sc_json, "JSON output");

  // simulate
  std::string sim_spec, sim_ctm, sim_gold, sim_switches;
  int blocks = 0;
  std::optional<std::uint64_t> sim_seed;
  auto *simulate = app.add_subcommand("simulate", "Generate a synthetic CTM and gold labels");
  simulate->add_option("--spec", sim_spec, "Simulation spec (JSON)")->required()
      ->check(CLI::ExistingFile);
  simulate->add_option("--ctm", sim_ctm, "Output CTM")->required();
  simulate->add_option("--gold", sim_gold, "Output gold labels")->required();
  simulate->add_option("--codeswitch-blocks", blocks,
                       "Generate code-switched utterances with this many blocks");
  simulate->add_option("--switches", sim_switches, "Output gold switch points");
  simulate->add_option("--seed", sim_seed, "Overrides the spec's seed");

  // pipeline
  std::string pl_spec, pl_dir, pl_langs;
  std::optional<std::uint64_t> pl_seed;
  auto *pipeline = app.add_subcommand("pipeline", "simulate -> identify -> score");
  pipeline->add_option("--spec", pl_spec, "Simulation spec (JSON)")->required()
      ->check(CLI::ExistingFile);
  pipeline->add_option("--out-dir", pl_dir, "Directory for all artifacts")->required();
  pipeline->add_option("--languages", pl_langs, "Tie-break order (default: spec order)");
  pipeline->add_option("--seed", pl_seed, "Overrides the spec's seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*lexicon) {
      std::vector<Lexicon> parts;
      for (const std::string &arg : lex_parts) {
        PartSpec part = ParsePartSpec(arg, true);
        Lexicon lex = LoadLexicon(ReadInput(part.first), part.language);
        if (!part.second.empty())
          lex = FilterTopK(lex, RawLines(ReadInput(part.second)), top_k);
        parts.push_back(std::move(lex));
      }
      Emit(lex_out, WriteLexicon(MergeLexicons(parts)), out);
    } else if (*lm) {
      std::vector<CorpusPart> parts;
      for (const std::string &arg : lm_parts) {
        PartSpec part = ParsePartSpec(arg, false);
        parts.push_back({part.language, RawLines(ReadInput(part.first))});
      }
      Corpus corpus = BuildCorpus(parts, lm_seed);
      if (!corpus_out.empty()) WriteFileAtomic(corpus_out, WriteCorpus(corpus));
      Emit(lm_out, WriteArpa(TrainNgram(corpus, order)), out);
    } else if (*identify) {
      auto languages = LanguagesFlag(id_langs);
      IdentifyResult result = Identify(LoadCtm(id_ctm, id_phones), languages);
      ReportFailures(result, err);
      Emit(id_out, id_json ? PredictionsJson(result) : WritePredictions(result.predictions),
           out);
    } else if (*codeswitch) {
      std::string text;
      nlohmann::ordered_json all = nlohmann::ordered_json::object();
      for (const auto &[utt, group] : GroupByUtterance(LoadCtm(cs_ctm, cs_phones))) {
        std::vector<Segment> segments;
        try {
          segments = SegmentLanguages(group, threshold);
        } catch (const Error &e) {
          err << "warning: utterance " << utt << " not segmented: " << e.what() << "\n";
          continue;
        }
        if (cs_json) {
          all[utt] = nlohmann::ordered_json::parse(SegmentsJson(segments));
        } else {
          text += "utterance\t" + utt + "\n" + SegmentReport(segments);
        }
      }
      Emit(cs_out, cs_json ? all.dump(2) + "\n" : text, out);
    } else if (*score) {
      auto languages = LanguagesFlag(sc_langs);
      LabelMap gold = ReadGoldLabels(ReadInput(sc_gold));
      CheckClosedSet(gold, languages);
      EvalReport report = Score(ReadPredictions(ReadInput(sc_pred)), gold);
      Emit(sc_out, sc_json ? ReportJson(report) : ReportText(report), out);
    } else if (*simulate) {
      SimSpec spec = LoadSimSpec(sim_spec, sim_seed);
      SimOutput sim = blocks > 0 ? SimulateCodeswitch(spec, blocks) : Simulate(spec);
      WriteFileAtomic(sim_ctm, WriteCtm(sim.ctm));
      WriteFileAtomic(sim_gold, WriteGoldLabels(sim.gold));
      if (!sim_switches.empty())
        WriteFileAtomic(sim_switches, WriteSwitchGold(sim.switch_gold));
    } else if (*pipeline) {
      SimSpec spec = LoadSimSpec(pl_spec, pl_seed);
      auto languages = pl_langs.empty() ? spec.languages : LanguagesFlag(pl_langs);
      fs::create_directories(pl_dir);
      const fs::path dir(pl_dir);

      SimOutput sim = Simulate(spec);
      WriteFileAtomic(dir / "sim.ctm", WriteCtm(sim.ctm));
      WriteFileAtomic(dir / "gold.tsv", WriteGoldLabels(sim.gold));

      // Re-read the written CTM so the pipeline sees exactly what the
      // identify subcommand would.
      IdentifyResult result = Identify(ParseCtm(ReadFile(dir / "sim.ctm")), languages);
      ReportFailures(result, err);
      WriteFileAtomic(dir / "predictions.tsv", WritePredictions(result.predictions));

      EvalReport report = Score(ReadPredictions(ReadFile(dir / "predictions.tsv")),
                                ReadGoldLabels(ReadFile(dir / "gold.tsv")));
      std::string text = ReportText(report);
      WriteFileAtomic(dir / "report.txt", text);
      WriteFileAtomic(dir / "report.json", ReportJson(report));
      out << text;
    }
  } catch (const UsageError &e) {
    err << "phonevote: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error &e) {
    err << "phonevote: " << e.what() << "\n";
    return kExitDataError;
  } catch (const fs::filesystem_error &e) {
    err << "phonevote: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace phonevote
