// Copyright 2026 The textaug Authors
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

#include "cli.h"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "textaug/backtranslate.h"
#include "textaug/config.h"
#include "textaug/corpus.h"
#include "textaug/eda.h"
#include "textaug/errors.h"
#include "textaug/eval.h"
#include "textaug/experiment.h"
#include "textaug/experiment_config.h"
#include "textaug/features.h"
#include "textaug/lexicon.h"
#include "textaug/models.h"
#include "textaug/random.h"
#include "textaug/reports.h"
#include "textaug/text.h"
#include "textaug/translation_cache.h"
#include "textaug/translator.h"

namespace textaug::cli {
namespace {

// Thrown for flag combinations CLI11 cannot express; reported like a parse
// error (help text, exit 1).
struct BadUsage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
auto Stage(const std::string& what, F&& fn) {
  try {
    return fn();
  } catch (const std::exception&) {
    std::throw_with_nested(Error(what));
  }
}

void PrintCauseChain(const std::exception& e, std::ostream& err, int depth = 0) {
  err << (depth == 0 ? "error: " : "  caused by: ") << e.what() << '\n';
  try {
    std::rethrow_if_nested(e);
  } catch (const std::exception& inner) {
    PrintCauseChain(inner, err, depth + 1);
  } catch (...) {
    err << "  caused by: unknown exception\n";
  }
}

std::string Fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

struct CleanFlags {
  std::string norm = (DefaultDataDir() / "normalization.tsv").string();
  bool keep_apostrophes = false;

  void Register(CLI::App* app) {
    app->add_option("--norm", norm, "Normalization table (pattern<TAB>replacement)")
        ->capture_default_str();
    app->add_flag("--keep-apostrophes", keep_apostrophes,
                  "Keep apostrophes inside tokens instead of dropping them");
  }
  TextCleaner Make() const {
    return Stage("loading normalization table " + norm, [&] {
      return TextCleaner(NormalizationTable::Load(norm), {keep_apostrophes});
    });
  }
};

Corpus ReadCorpus(const std::string& path) {
  return Stage("reading " + path, [&] { return ReadTsv(path); });
}

void WriteCorpus(const Corpus& corpus, const std::string& path) {
  Stage("writing " + path, [&] {
    WriteTsv(corpus, path);
    return 0;
  });
}

struct Command {
  CLI::App* app = nullptr;
  std::shared_ptr<std::uint64_t> seed = std::make_shared<std::uint64_t>(42);
  std::function<void(std::ostream&, std::ostream&)> run;
};

void AddSeed(Command& cmd, const std::string& help) {
  cmd.app->add_option("--seed", *cmd.seed, help)->capture_default_str();
}

// ---------------------------------------------------------------- ingest

Command Ingest(CLI::App& root) {
  struct Opts {
    std::string in, out, split_dir;
    CsvSchema schema;
    CleanFlags clean;
    double test_fraction = 0.2, small_fraction = 0.05;
    bool no_stratify = false;
  };
  auto o = std::make_shared<Opts>();
  Command cmd;
  cmd.app = root.add_subcommand("ingest", "Clean a labeled CSV into an id/label/text TSV");
  auto* app = cmd.app;
  app->add_option("--in", o->in, "Input CSV with a header row")->required()->check(CLI::ExistingFile);
  app->add_option("--out", o->out, "Output TSV (id, label, text)")->required();
  app->add_option("--id-column", o->schema.id_column, "Id column")->capture_default_str();
  app->add_option("--text-column", o->schema.text_column, "Text column")->capture_default_str();
  app->add_option("--label-columns", o->schema.label_columns,
                  "Label columns; a row is positive when any of them is 1")
      ->delimiter(',')
      ->capture_default_str();
  o->clean.Register(app);
  app->add_option("--split-dir", o->split_dir,
                  "Also write train.tsv, test.tsv and small.tsv here");
  app->add_option("--test-fraction", o->test_fraction, "Test share of the corpus")
      ->capture_default_str();
  app->add_option("--small-fraction", o->small_fraction,
                  "Small-train share of the training split")
      ->capture_default_str();
  app->add_flag("--no-stratify", o->no_stratify, "Sample without stratifying by label");
  AddSeed(cmd, "Master seed; split and sample seeds derive from it as in experiment");
  cmd.run = [o, seed = cmd.seed](std::ostream& out, std::ostream&) {
    const TextCleaner cleaner = o->clean.Make();
    const Corpus corpus =
        Stage("loading " + o->in, [&] { return LoadCsv(o->in, o->schema, cleaner); });
    WriteCorpus(corpus, o->out);
    out << "documents\t" << corpus.size() << "\npositive\t" << corpus.positive_count()
        << '\n';
    if (o->split_dir.empty()) return;
    ExperimentPlan plan;
    plan.master_seed = *seed;
    SplitSpec spec{o->test_fraction, o->small_fraction, plan.SplitSeed(), !o->no_stratify};
    const TrainTestSplit split = SplitCorpus(corpus, spec);
    const Corpus small = SampleFraction(split.train, o->small_fraction,
                                        plan.SampleSeed(), spec.stratified);
    std::filesystem::create_directories(o->split_dir);
    const std::filesystem::path dir(o->split_dir);
    WriteCorpus(split.train, (dir / "train.tsv").string());
    WriteCorpus(split.test, (dir / "test.tsv").string());
    WriteCorpus(small, (dir / "small.tsv").string());
    out << "train\t" << split.train.size() << "\ntest\t" << split.test.size()
        << "\nsmall\t" << small.size() << '\n';
  };
  return cmd;
}

// ----------------------------------------------------------- augment-eda

Command AugmentEdaCommand(CLI::App& root) {
  struct Opts {
    std::string in, out, op = "random";
    std::string lexicon = (DefaultDataDir() / "lexicon.tsv").string();
    std::string stopwords = (DefaultDataDir() / "stopwords.txt").string();
    double alpha = 0.1;
    int naug = 9;
    unsigned threads = 1;
  };
  auto o = std::make_shared<Opts>();
  Command cmd;
  cmd.app = root.add_subcommand("augment-eda", "Add EDA copies of every document");
  auto* app = cmd.app;
  app->add_option("--in", o->in, "Input TSV")->required()->check(CLI::ExistingFile);
  app->add_option("--out", o->out, "Output TSV: originals then copies")->required();
  app->add_option("--alpha", o->alpha, "Share of tokens each operation touches")
      ->capture_default_str();
  app->add_option("--naug", o->naug, "Copies per document")->capture_default_str();
  app->add_option("--op", o->op, "Operation: random, sr, rs, ri or rd")->capture_default_str();
  app->add_option("--lexicon", o->lexicon, "Synonym lexicon")->capture_default_str();
  app->add_option("--stopwords", o->stopwords, "Stopword list")->capture_default_str();
  app->add_option("--threads", o->threads, "Worker threads")->capture_default_str();
  AddSeed(cmd, "Augmentation seed");
  cmd.run = [o, seed = cmd.seed](std::ostream& out, std::ostream& err) {
    AugmentationConfig cfg;
    cfg.alpha = o->alpha;
    cfg.n_aug = o->naug;
    cfg.seed = *seed;
    if (o->op != "random") cfg.fixed_op = ParseEdaOp(o->op);
    cfg.Validate();
    const Corpus corpus = ReadCorpus(o->in);
    const SynonymLexicon lexicon = Stage("loading lexicon", [&] {
      return SynonymLexicon::Load(o->lexicon, o->stopwords);
    });
    std::vector<std::string> warnings;
    const Corpus augmented = AugmentCorpusEda(corpus, cfg, lexicon, &warnings, o->threads);
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    WriteCorpus(augmented, o->out);
    out << "documents\t" << augmented.size() << '\n';
  };
  return cmd;
}

// ------------------------------------------------------------ augment-bt

Command AugmentBtCommand(CLI::App& root) {
  struct Opts {
    std::string in, out, langs = "all", cache, provider = "mock", script;
    std::string endpoint, provider_id;
    bool no_identity = false;
    double max_failure_fraction = 0.05;
    unsigned workers = 1;
    CleanFlags clean;
  };
  auto o = std::make_shared<Opts>();
  Command cmd;
  cmd.app = root.add_subcommand("augment-bt", "Add one backtranslated copy per pivot language");
  auto* app = cmd.app;
  app->add_option("--in", o->in, "Input TSV")->required()->check(CLI::ExistingFile);
  app->add_option("--out", o->out, "Output TSV: originals then copies per pivot")->required();
  app->add_option("--langs", o->langs, "Pivot languages, e.g. es,fr, or all")
      ->capture_default_str();
  app->add_option("--provider", o->provider, "Translation provider: mock or http")
      ->check(CLI::IsMember({"mock", "http"}))
      ->capture_default_str();
  app->add_option("--script", o->script, "Mock legs (from, to, source, target TSV)");
  app->add_flag("--no-identity-fallback", o->no_identity,
                "Mock: fail on unscripted legs instead of returning the input");
  app->add_option("--endpoint", o->endpoint, "HTTP provider endpoint URL");
  app->add_option("--provider-id", o->provider_id, "Provider id stored in the cache");
  app->add_option("--cache", o->cache, "Persistent translation cache (JSON lines)");
  app->add_option("--max-failure-fraction", o->max_failure_fraction,
                  "Abort when more documents than this fail")
      ->capture_default_str();
  app->add_option("--workers", o->workers, "Concurrent documents")->capture_default_str();
  o->clean.Register(app);
  AddSeed(cmd, "Accepted for uniformity; backtranslation draws no random numbers");
  cmd.run = [o](std::ostream& out, std::ostream& err) {
    ProviderSettings settings;
    settings.kind = o->provider;
    if (!o->script.empty()) settings.script = o->script;
    settings.identity_fallback = !o->no_identity;
    settings.http.provider_id = o->provider == "mock" ? "mock" : settings.http.provider_id;
    if (!o->provider_id.empty()) settings.http.provider_id = o->provider_id;
    if (!o->endpoint.empty()) settings.http.endpoint = o->endpoint;
    const auto pivots = ParseLanguageList(o->langs);
    const TextCleaner cleaner = o->clean.Make();
    const Corpus corpus = ReadCorpus(o->in);
    auto translator = Stage("configuring provider", [&] { return MakeTranslator(settings); });
    std::optional<TranslationCache> cache;
    if (o->cache.empty()) {
      cache.emplace();
    } else {
      Stage("opening cache " + o->cache, [&] {
        cache.emplace(std::filesystem::path(o->cache));
        return 0;
      });
    }
    BtOptions options;
    options.max_failure_fraction = o->max_failure_fraction;
    options.workers = o->workers;
    const BtResult result = Stage("backtranslating", [&] {
      return AugmentBt(corpus, pivots, *translator, *cache, cleaner, options);
    });
    for (const auto& f : result.failures) {
      err << "warning: " << f.document_id << " via " << f.pivot.str() << ": "
          << f.message << '\n';
    }
    WriteCorpus(result.corpus, o->out);
    out << "documents\t" << result.corpus.size() << "\nfailures\t"
        << result.failures.size() << '\n';
  };
  return cmd;
}

// ----------------------------------------------------------------- train

Command TrainCommand(CLI::App& root) {
  struct Opts {
    std::string in, model, vectorizer, classifier = "logistic";
    std::optional<int> epochs;
    std::optional<double> lambda, lr0;
    std::string schedule = "invscaling", weighting = "none";
    std::size_t min_df = 1, max_features = 0;
  };
  auto o = std::make_shared<Opts>();
  Command cmd;
  cmd.app = root.add_subcommand("train", "Fit TF-IDF and a linear classifier on a TSV");
  auto* app = cmd.app;
  app->add_option("--in", o->in, "Training TSV")->required()->check(CLI::ExistingFile);
  app->add_option("--model", o->model, "Output model file")->required();
  app->add_option("--vectorizer", o->vectorizer, "Output TF-IDF file")->required();
  app->add_option("--classifier", o->classifier, "logistic or hinge")->capture_default_str();
  app->add_option("--epochs", o->epochs, "Passes over the data (default 30)");
  app->add_option("--lambda", o->lambda, "L2 strength (default 1e-4)");
  app->add_option("--lr0", o->lr0, "Initial step (default 0.5 logistic, 0.1 hinge)");
  app->add_option("--schedule", o->schedule, "constant or invscaling")
      ->check(CLI::IsMember({"constant", "invscaling"}))
      ->capture_default_str();
  app->add_option("--class-weighting", o->weighting, "none or balanced")
      ->check(CLI::IsMember({"none", "balanced"}))
      ->capture_default_str();
  app->add_option("--min-df", o->min_df, "Minimum document frequency")->capture_default_str();
  app->add_option("--max-features", o->max_features, "Vocabulary cap, 0 for none")
      ->capture_default_str();
  AddSeed(cmd, "Shuffling seed");
  cmd.run = [o, seed = cmd.seed](std::ostream& out, std::ostream&) {
    const LossKind kind = ParseLossKind(o->classifier);
    TrainConfig cfg = TrainConfig::Defaults(kind);
    if (o->epochs) cfg.epochs = *o->epochs;
    if (o->lambda) cfg.l2_lambda = *o->lambda;
    if (o->lr0) cfg.lr0 = *o->lr0;
    cfg.decay = cfg.lr0 * cfg.l2_lambda;
    cfg.schedule = o->schedule == "constant" ? LearningRateSchedule::kConstant
                                             : LearningRateSchedule::kInverseScaling;
    cfg.class_weighting =
        o->weighting == "balanced" ? ClassWeighting::kBalanced : ClassWeighting::kNone;
    cfg.seed = *seed;
    cfg.Validate();
    const Corpus corpus = ReadCorpus(o->in);
    TfIdfOptions tfidf_options;
    tfidf_options.min_df = o->min_df;
    tfidf_options.max_features = o->max_features;
    const TfIdfModel tfidf = Stage("fitting TF-IDF", [&] {
      return TfIdfModel::Fit(corpus, tfidf_options);
    });
    const auto x = tfidf.TransformAll(corpus);
    const auto y = corpus.labels();
    const LinearModel model = Stage("training", [&] {
      return Train(x, y, cfg, kind, tfidf.vocab_size());
    });
    Stage("writing model", [&] {
      tfidf.SaveFile(o->vectorizer);
      model.SaveFile(o->model);
      return 0;
    });
    out << "documents\t" << corpus.size() << "\nvocab_size\t" << tfidf.vocab_size()
        << '\n';
  };
  return cmd;
}

// ------------------------------------------------------------------ eval

Command EvalCommand(CLI::App& root) {
  struct Opts {
    std::string in, model, vectorizer;
    double threshold = 0.5;
    std::size_t top_k = 0;
  };
  auto o = std::make_shared<Opts>();
  Command cmd;
  cmd.app = root.add_subcommand("eval", "Score a trained model on a labeled TSV");
  auto* app = cmd.app;
  app->add_option("--in", o->in, "Test TSV")->required()->check(CLI::ExistingFile);
  app->add_option("--model", o->model, "Model file from train")->required()->check(CLI::ExistingFile);
  app->add_option("--vectorizer", o->vectorizer, "TF-IDF file from train")
      ->required()
      ->check(CLI::ExistingFile);
  app->add_option("--threshold", o->threshold, "Logistic decision threshold")
      ->capture_default_str();
  app->add_option("--top-k", o->top_k, "Also print the k heaviest terms")->capture_default_str();
  AddSeed(cmd, "Accepted for uniformity; evaluation draws no random numbers");
  cmd.run = [o](std::ostream& out, std::ostream&) {
    const Corpus corpus = ReadCorpus(o->in);
    const TfIdfModel tfidf =
        Stage("loading " + o->vectorizer, [&] { return TfIdfModel::LoadFile(o->vectorizer); });
    const LinearModel model =
        Stage("loading " + o->model, [&] { return LinearModel::LoadFile(o->model); });
    std::vector<Label> predictions;
    for (const auto& x : tfidf.TransformAll(corpus)) {
      predictions.push_back(model.Predict(x, o->threshold));
    }
    const ConfusionMatrix cm = Confusion(predictions, corpus.labels());
    const Metrics m = PrecisionRecallF1(cm);
    out << "precision\t" << Fixed(m.precision) << "\nrecall\t" << Fixed(m.recall)
        << "\nf1\t" << Fixed(m.f1) << "\ntp\t" << cm.tp << "\nfp\t" << cm.fp
        << "\nfn\t" << cm.fn << "\ntn\t" << cm.tn << '\n';
    if (o->top_k > 0) {
      out << "rank\tterm\tweight\n";
      const auto top = FeatureImportance(model, tfidf, o->top_k);
      for (std::size_t i = 0; i < top.size(); ++i) {
        out << i + 1 << '\t' << top[i].term << '\t' << Fixed(top[i].weight) << '\n';
      }
    }
  };
  return cmd;
}

// ------------------------------------------------------------ experiment

Command ExperimentCommand(CLI::App& root) {
  struct Opts {
    std::string config, out;
    std::optional<unsigned> threads;
    bool no_sweep = false;
  };
  auto o = std::make_shared<Opts>();
  Command cmd;
  cmd.app = root.add_subcommand("experiment", "Run the full benchmark and write reports");
  auto* app = cmd.app;
  app->add_option("--config", o->config, "Experiment config (key = value)")
      ->required()
      ->check(CLI::ExistingFile);
  app->add_option("--out", o->out, "Report directory (overrides output.dir)");
  app->add_option("--threads", o->threads, "Worker threads (overrides threads)");
  app->add_flag("--no-sweep", o->no_sweep, "Skip the training-size sweep");
  auto* seed_opt = app->add_option("--seed", *cmd.seed, "Master seed (overrides seed)");
  cmd.run = [o, seed_opt, seed = cmd.seed](std::ostream& out, std::ostream& err) {
    KeyValueConfig kv = Stage("reading " + o->config, [&] {
      return KeyValueConfig::Load(o->config);
    });
    if (seed_opt->count() > 0) kv.Set("seed", std::to_string(*seed));
    if (o->threads) kv.Set("threads", std::to_string(*o->threads));
    if (o->no_sweep) kv.Set("report.sweep", "false");
    ExperimentConfig cfg = ExperimentConfig::FromKeyValues(kv);
    if (!o->out.empty()) cfg.output_dir = o->out;
    if (cfg.output_dir.empty()) throw BadUsage("no output directory: pass --out or set output.dir");
    err << "textaug experiment: config " << cfg.hash << '\n';
    const ExperimentRun run = RunExperiment(cfg);
    for (const auto& w : run.results.warnings) err << "warning: " << w << '\n';
    Stage("writing reports to " + cfg.output_dir.string(), [&] {
      EmitReports(run.results, run.sweep, cfg.output_dir);
      return 0;
    });
    out << FormatResultsText(run.results);
    std::size_t failed = 0;
    for (const auto& cell : run.results.cells) failed += cell.ok ? 0 : 1;
    if (failed > 0) err << failed << " cell(s) failed; see results.tsv\n";
  };
  return cmd;
}

// ---------------------------------------------------------------- report

Command ReportCommand(CLI::App& root) {
  auto results = std::make_shared<std::string>();
  Command cmd;
  cmd.app = root.add_subcommand("report", "Print the F1 and recall tables of a results.tsv");
  cmd.app->add_option("--results", *results, "results.tsv or the directory holding it")
      ->required()
      ->check(CLI::ExistingPath);
  AddSeed(cmd, "Accepted for uniformity; reporting draws no random numbers");
  cmd.run = [results](std::ostream& out, std::ostream&) {
    std::filesystem::path path(*results);
    if (std::filesystem::is_directory(path)) path /= "results.tsv";
    const ResultsTable table = Stage("reading " + path.string(), [&] {
      return ReadResultsTsv(path);
    });
    out << FormatResultsText(table);
  };
  return cmd;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Text augmentation (EDA, backtranslation) and TF-IDF linear benchmarks",
               "textaug");
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  std::vector<Command> commands;
  commands.reserve(8);
  commands.push_back(Ingest(app));
  commands.push_back(AugmentEdaCommand(app));
  commands.push_back(AugmentBtCommand(app));
  commands.push_back(TrainCommand(app));
  commands.push_back(EvalCommand(app));
  commands.push_back(ExperimentCommand(app));
  commands.push_back(ReportCommand(app));

  auto usage = [&](const std::string& message) {
    err << "error: " << message << "\n\n";
    const auto parsed = app.get_subcommands();
    err << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitUsage;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return usage(e.what());
  }

  for (Command& cmd : commands) {
    if (!cmd.app->parsed()) continue;
    err << "textaug " << cmd.app->get_name() << ": options "
        << ToHex64(StableHash(cmd.app->config_to_str(true, false))) << '\n';
    try {
      cmd.run(out, err);
      return kExitOk;
    } catch (const BadUsage& e) {
      return usage(e.what());
    } catch (const ConfigError& e) {
      return usage(e.what());
    } catch (const std::exception& e) {
      PrintCauseChain(e, err);
      return kExitRuntime;
    }
  }
  return usage("no subcommand");
}

}  // namespace textaug::cli
