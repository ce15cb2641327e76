//
// Copyright 2026 The MWPA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// mwpa: command-line front end for the augmentation toolkit.
//
// Exit codes: 0 ok, 1 usage, 2 data error, 3 provider failure (outputs
// are still written).

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "mwpa/common/file.h"
#include "mwpa/common/status.h"
#include "mwpa/corpus/loaders.h"
#include "mwpa/corpus/stats.h"
#include "mwpa/perturb/perturb.h"
#include "mwpa/pipeline/config.h"
#include "mwpa/pipeline/evaluation.h"
#include "mwpa/pipeline/pipeline.h"
#include "mwpa/providers/server.h"
#include "mwpa/providers/stubs.h"
#include "mwpa/review/review_service.h"

namespace mwpa {
namespace {

enum Exit { kOk = 0, kUsage = 1, kData = 2, kProvider = 3 };

int Fail(int code, const absl::Status& status) {
  std::cerr << "mwpa: " << status.message();
  if (std::string kind = ErrorKind(status); !kind.empty()) {
    std::cerr << " [" << kind << "]";
  }
  std::cerr << "\n";
  return code;
}

// Explicit --format wins; otherwise the extension decides.
absl::StatusOr<CorpusFormat> FormatFor(const std::string& path,
                                       const std::string& format) {
  if (!format.empty()) return ParseCorpusFormat(format);
  if (absl::EndsWith(path, ".jsonl")) return CorpusFormat::kCanonicalJsonl;
  if (absl::EndsWith(path, ".json")) return CorpusFormat::kMawpsJson;
  if (absl::EndsWith(path, ".xml")) return CorpusFormat::kAsdivXmlish;
  return MakeError(absl::StatusCode::kInvalidArgument, "unknown_format",
                   absl::StrCat("cannot tell the format of ", path,
                                "; pass --format"));
}

absl::StatusOr<LoadResult> Load(const std::string& path,
                                const std::string& format) {
  absl::StatusOr<CorpusFormat> f = FormatFor(path, format);
  if (!f.ok()) return f.status();
  absl::StatusOr<LoadResult> r = LoadCorpus(path, *f);
  if (!r.ok()) return r;
  for (const Reject& rej : r->rejects) {
    std::cerr << "mwpa: " << path << ": rejected record " << rej.record_index
              << " (" << rej.record_id << "): " << rej.kind << ": "
              << rej.reason << "\n";
  }
  return r;
}

absl::Status Write(const std::string& path, const std::string& contents) {
  return WriteFile(path, contents);
}

struct Flags {
  std::string in, out, format, report, stats_out, config, key, ratings,
      batch, host = "127.0.0.1", assets, out_dir, manifest, kind;
  int k = 5, workers = 0, port = 0;
  uint64_t seed = 0;
  double rate = kDefaultDeleteRate, fraction = 0.4;
  bool seed_set = false, table = false;
};

int RunAugment(const Flags& f) {
  absl::StatusOr<PipelineConfig> cfg =
      f.config.empty() ? ParseConfig("") : LoadConfig(f.config);
  if (!cfg.ok()) return Fail(kUsage, cfg.status());
  if (f.workers > 0) cfg->workers = f.workers;
  if (f.seed_set) {
    cfg->seed = f.seed;
    cfg->substitution.seed = f.seed;
  }
  absl::StatusOr<LoadResult> input = Load(f.in, f.format);
  if (!input.ok()) return Fail(kData, input.status());
  absl::StatusOr<std::unique_ptr<ProviderBundle>> providers =
      ProviderBundle::FromConfig(*cfg);
  if (!providers.ok()) return Fail(kProvider, providers.status());

  AugmentResult result =
      AugmentDataset(input->problems, *cfg, (*providers)->set());
  for (const std::string& line : result.failures) {
    std::cerr << "mwpa: provider: " << line << "\n";
  }
  if (absl::Status s = WriteCanonicalJsonl(f.out, result.problems); !s.ok()) {
    return Fail(kData, s);
  }
  if (!f.report.empty()) {
    if (absl::Status s = Write(f.report, result.ReportJsonl()); !s.ok()) {
      return Fail(kData, s);
    }
  }
  const std::string stats = result.stats.ToJson();
  if (!f.stats_out.empty()) {
    if (absl::Status s = Write(f.stats_out, stats); !s.ok()) {
      return Fail(kData, s);
    }
  }
  std::cerr << "mwpa: " << result.stats.input_problems << " in, "
            << result.stats.output_problems << " out (growth "
            << result.stats.growth() << ")\n";
  return result.stats.provider_failures() > 0 ? kProvider : kOk;
}

int RunStats(const Flags& f) {
  absl::StatusOr<LoadResult> r = Load(f.in, f.format);
  if (!r.ok()) return Fail(kData, r.status());
  CorpusStats s = ComputeCorpusStats(r->problems);
  nlohmann::ordered_json j;
  j["problems"] = s.problem_count;
  j["rejects"] = r->rejects.size();
  j["vocabulary"] = s.vocabulary_size;
  j["tokens"] = s.token_count;
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int RunSplit(const Flags& f) {
  absl::StatusOr<LoadResult> r = Load(f.in, f.format);
  if (!r.ok()) return Fail(kData, r.status());
  absl::StatusOr<std::vector<Fold>> folds = KFoldSplit(r->problems, f.k, f.seed);
  if (!folds.ok()) return Fail(kUsage, folds.status());
  std::map<std::string, const Problem*> by_id;
  for (const Problem& p : r->problems) by_id[p.id] = &p;
  std::filesystem::create_directories(f.out_dir);
  for (size_t i = 0; i < folds->size(); ++i) {
    for (auto [side, ids] : {std::pair{"train", &(*folds)[i].train_ids},
                             std::pair{"test", &(*folds)[i].test_ids}}) {
      std::vector<Problem> part;
      for (const std::string& id : *ids) part.push_back(*by_id.at(id));
      const std::filesystem::path path =
          std::filesystem::path(f.out_dir) /
          absl::StrCat("fold", i, "_", side, ".jsonl");
      if (absl::Status s = WriteCanonicalJsonl(path, part); !s.ok()) {
        return Fail(kData, s);
      }
    }
    std::cout << "fold " << i << ": " << (*folds)[i].train_ids.size()
              << " train, " << (*folds)[i].test_ids.size() << " test\n";
  }
  return kOk;
}

int RunPerturb(const Flags& f) {
  absl::StatusOr<PerturbKind> kind = ParsePerturbKind(f.kind);
  if (!kind.ok()) return Fail(kUsage, kind.status());
  PerturbationSpec spec{*kind, f.rate, f.seed};
  if (absl::Status s = spec.Validate(); !s.ok()) return Fail(kUsage, s);
  absl::StatusOr<LoadResult> r = Load(f.in, f.format);
  if (!r.ok()) return Fail(kData, r.status());
  PerturbResult result = PerturbCorpus(r->problems, spec);
  if (absl::Status s = WriteCanonicalJsonl(f.out, result.problems); !s.ok()) {
    return Fail(kData, s);
  }
  const std::string manifest =
      f.manifest.empty() ? f.out + ".manifest.json" : f.manifest;
  if (absl::Status s = Write(manifest, result.ManifestJson(spec)); !s.ok()) {
    return Fail(kData, s);
  }
  std::cerr << "mwpa: " << result.problems.size() << " perturbed, "
            << result.skipped.size() << " skipped\n";
  return kOk;
}

int RunEvalExport(const Flags& f) {
  absl::StatusOr<LoadResult> r = Load(f.in, f.format);
  if (!r.ok()) return Fail(kData, r.status());
  absl::StatusOr<EvalBatch> batch =
      ExportEvalBatch(r->problems, f.fraction, f.seed);
  if (!batch.ok()) {
    return Fail(ErrorKind(batch.status()) == "bad_fraction" ? kUsage : kData,
                batch.status());
  }
  const std::string key = f.key.empty() ? f.out + ".key.jsonl" : f.key;
  for (auto [path, text] : {std::pair{f.out, batch->BatchJsonl()},
                            std::pair{key, batch->KeyJsonl()}}) {
    if (absl::Status s = Write(path, text); !s.ok()) return Fail(kData, s);
  }
  std::cerr << "mwpa: " << batch->items.size() << " pairs exported\n";
  return kOk;
}

absl::StatusOr<std::map<std::string, EvalItem>> MaybeKey(
    const std::string& path) {
  if (path.empty()) return std::map<std::string, EvalItem>{};
  return LoadEvalKey(path);
}

int RunEvalSummarize(const Flags& f) {
  absl::StatusOr<std::vector<Rating>> ratings = LoadRatings(f.ratings);
  if (!ratings.ok()) return Fail(kData, ratings.status());
  absl::StatusOr<std::map<std::string, EvalItem>> key = MaybeKey(f.key);
  if (!key.ok()) return Fail(kData, key.status());
  std::vector<FamilySummary> summary = SummarizeRatings(*ratings, *key);
  std::cout << (f.table ? FormatSummaryTable(summary)
                        : FormatSummaryJson(summary));
  return kOk;
}

int RunServe(const Flags& f) {
  absl::StatusOr<EvalBatch> batch = LoadEvalBatch(f.batch);
  if (!batch.ok()) return Fail(kData, batch.status());
  absl::StatusOr<std::map<std::string, EvalItem>> key = MaybeKey(f.key);
  if (!key.ok()) return Fail(kData, key.status());
  ReviewOptions options;
  options.ratings_path = f.ratings;
  options.key = *std::move(key);
  if (!f.assets.empty()) options.assets_dir = f.assets;
  absl::StatusOr<std::unique_ptr<ReviewService>> service =
      ReviewService::Create(*std::move(batch), std::move(options));
  if (!service.ok()) return Fail(kData, service.status());
  const int port = f.port > 0 ? f.port : kDefaultReviewPort;
  std::cerr << "mwpa: review service on http://" << f.host << ":" << port
            << "\n";
  if (absl::Status s = (*service)->Run(f.host, port); !s.ok()) {
    return Fail(kUsage, s);
  }
  return kOk;
}

int RunServeProviders(const Flags& f) {
  static const LexiconParaphraser paraphrase;
  static const PhraseTableTranslator translate;
  static const ContextTableFiller fill;
  static const SynonymTableEmbeddings nearest;
  static const TokenCosineSimilarity similarity;
  static const HashedLoss loss;
  ProviderServer server(
      {&paraphrase, &translate, &fill, &nearest, &similarity, &loss});
  const int port = f.port > 0 ? f.port : 8471;
  std::cerr << "mwpa: stub providers on http://" << f.host << ":" << port
            << "\n";
  if (absl::Status s = server.Run(f.host, port); !s.ok()) {
    return Fail(kUsage, s);
  }
  return kOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Math word problem augmentation toolkit"};
  app.require_subcommand(1);
  Flags f;

  auto input = [&](CLI::App* sub) {
    sub->add_option("--in", f.in, "Input corpus")->required();
    sub->add_option("--format", f.format,
                    "mawps_json | asdiv_xmlish | canonical_jsonl "
                    "(default: from the extension)");
  };
  auto seed = [&](CLI::App* sub) {
    sub->add_option("--seed", f.seed, "Random seed")
        ->each([&](const std::string&) { f.seed_set = true; });
  };

  CLI::App* augment = app.add_subcommand("augment", "Augment a corpus");
  input(augment);
  seed(augment);
  augment->add_option("--config", f.config, "Key/value config file");
  augment->add_option("--out", f.out, "Output corpus (JSONL)")->required();
  augment->add_option("--report", f.report, "Selection report (JSONL)");
  augment->add_option("--stats", f.stats_out, "Run statistics (JSON)");
  augment->add_option("--workers", f.workers, "Overrides the config");

  CLI::App* stats = app.add_subcommand("stats", "Corpus statistics");
  input(stats);

  CLI::App* split = app.add_subcommand("split", "Parent-grouped k-fold split");
  input(split);
  seed(split);
  split->add_option("--k", f.k, "Number of folds")->check(CLI::Range(2, 1000));
  split->add_option("--out-dir", f.out_dir, "Where fold files go")->required();

  CLI::App* perturb = app.add_subcommand("perturb", "Build a probe test set");
  input(perturb);
  seed(perturb);
  perturb->add_option("--kind", f.kind,
                      "word_delete | question_drop | question_reorder | "
                      "sentence_shuffle | word_reorder")
      ->required();
  perturb->add_option("--rate", f.rate, "word_delete rate");
  perturb->add_option("--out", f.out, "Output corpus (JSONL)")->required();
  perturb->add_option("--manifest", f.manifest, "Default: <out>.manifest.json");

  CLI::App* eval_export =
      app.add_subcommand("eval-export", "Sample a blind evaluation batch");
  input(eval_export);
  seed(eval_export);
  eval_export->add_option("--fraction", f.fraction, "Share of augmentations");
  eval_export->add_option("--out", f.out, "Batch file (JSONL)")->required();
  eval_export->add_option("--key", f.key, "Default: <out>.key.jsonl");

  CLI::App* summarize =
      app.add_subcommand("eval-summarize", "Summarize ratings per family");
  summarize->add_option("--ratings", f.ratings, "Ratings file")->required();
  summarize->add_option("--key", f.key, "Key file from eval-export");
  summarize->add_flag("--table", f.table, "Text table instead of JSON");

  CLI::App* serve = app.add_subcommand("serve", "Run the review service");
  serve->add_option("--batch", f.batch, "Batch file")->required();
  serve->add_option("--ratings", f.ratings, "Ratings file")->required();
  serve->add_option("--key", f.key, "Key file, for the summary");
  serve->add_option("--port", f.port, "Default 8470");
  serve->add_option("--host", f.host, "Default 127.0.0.1");
  serve->add_option("--assets", f.assets, "Static UI directory");

  CLI::App* serve_providers = app.add_subcommand(
      "serve-providers", "Serve the stub providers over HTTP");
  serve_providers->add_option("--port", f.port, "Default 8471");
  serve_providers->add_option("--host", f.host, "Default 127.0.0.1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*augment) return RunAugment(f);
  if (*stats) return RunStats(f);
  if (*split) return RunSplit(f);
  if (*perturb) return RunPerturb(f);
  if (*eval_export) return RunEvalExport(f);
  if (*summarize) return RunEvalSummarize(f);
  if (*serve) return RunServe(f);
  if (*serve_providers) return RunServeProviders(f);
  return kUsage;
}

}  // namespace
}  // namespace mwpa

int main(int argc, char** argv) { return mwpa::Main(argc, argv); }
