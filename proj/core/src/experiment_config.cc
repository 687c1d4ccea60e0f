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

#include "textaug/experiment_config.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <optional>

#include "textaug/errors.h"
#include "textaug/lexicon.h"
#include "textaug/translation_cache.h"

#ifndef TEXTAUG_DEFAULT_DATA_DIR
#define TEXTAUG_DEFAULT_DATA_DIR "data"
#endif

namespace textaug {
namespace {

constexpr std::string_view kTrainKeys[] = {"epochs",   "lr0",  "schedule",
                                           "decay",    "l2_lambda",
                                           "class_weighting"};

std::vector<std::string_view> KnownKeys() {
  static const std::vector<std::string> owned = [] {
    std::vector<std::string> keys = {
        "seed", "threads", "methods", "classifiers", "fractions",
        "input.csv", "input.id_column", "input.text_column",
        "input.label_columns",
        "text.normalization", "text.keep_apostrophes",
        "lexicon.synonyms", "lexicon.stopwords",
        "split.test_fraction", "split.small_train_fraction", "split.stratified",
        "eda.alpha", "eda.n_aug", "eda.op",
        "bt.languages", "bt.source", "bt.max_failure_fraction", "bt.workers",
        "bt.attempts", "bt.backoff_ms", "bt.backoff_multiplier",
        "provider.kind", "provider.script", "provider.identity_fallback",
        "provider.id", "provider.endpoint", "provider.api_key_env",
        "provider.api_key_param", "provider.auth_header",
        "provider.auth_prefix", "provider.text_param",
        "provider.source_param", "provider.target_param",
        "provider.response_pointer", "provider.requests_per_second",
        "provider.max_request_chars", "provider.timeout_s",
        "provider.languages",
        "cache.path",
        "tfidf.min_df", "tfidf.max_features", "tfidf.norm",
        "report.top_k", "report.threshold", "report.sweep",
        "output.dir"};
    for (const char* clf : {"logistic", "hinge"}) {
      for (const auto key : kTrainKeys) {
        keys.push_back("train." + std::string(clf) + "." + std::string(key));
      }
    }
    return keys;
  }();
  return {owned.begin(), owned.end()};
}

LearningRateSchedule ParseSchedule(std::string_view name) {
  if (name == "constant") return LearningRateSchedule::kConstant;
  if (name == "invscaling") return LearningRateSchedule::kInverseScaling;
  throw ConfigError("unknown schedule '" + std::string(name) +
                    "' (expected constant or invscaling)");
}

ClassWeighting ParseWeighting(std::string_view name) {
  if (name == "none") return ClassWeighting::kNone;
  if (name == "balanced") return ClassWeighting::kBalanced;
  throw ConfigError("unknown class_weighting '" + std::string(name) +
                    "' (expected none or balanced)");
}

Norm ParseNorm(std::string_view name) {
  if (name == "l2") return Norm::kL2;
  if (name == "none") return Norm::kNone;
  throw ConfigError("unknown norm '" + std::string(name) + "'");
}

std::size_t GetSize(const KeyValueConfig& kv, std::string_view key,
                    std::size_t fallback) {
  return static_cast<std::size_t>(kv.GetUnsigned(key, fallback));
}

std::vector<LanguageCode> LanguagesOf(const KeyValueConfig& kv,
                                      std::string_view key,
                                      std::vector<LanguageCode> fallback) {
  const auto value = kv.Get(key);
  return value ? ParseLanguageList(*value) : fallback;
}

}  // namespace

ExperimentConfig ExperimentConfig::FromKeyValues(const KeyValueConfig& kv) {
  const auto known = KnownKeys();
  kv.RequireKnownKeys(known);

  ExperimentConfig cfg;
  ExperimentPlan& plan = cfg.plan;
  plan.master_seed = kv.GetUnsigned("seed", plan.master_seed);
  plan.threads = static_cast<unsigned>(kv.GetUnsigned("threads", 1));

  for (const auto& name : kv.GetList("methods", {"baseline", "eda", "bt(es)",
                                                 "bt(all)", "bt(all)+eda",
                                                 "oracle"})) {
    plan.methods.push_back(Method::Parse(name));
  }
  for (const auto& name : kv.GetList("classifiers", {"logistic", "hinge"})) {
    const LossKind kind = ParseLossKind(name);
    if (std::find(plan.classifiers.begin(), plan.classifiers.end(), kind) !=
        plan.classifiers.end()) {
      throw ConfigError("classifier '" + name + "' listed twice");
    }
    plan.classifiers.push_back(kind);
  }
  if (kv.Has("fractions")) {
    plan.fractions.clear();
    for (const auto& item : kv.GetList("fractions", {})) {
      double value = 0.0;
      const auto [end, ec] =
          std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc() || end != item.data() + item.size()) {
        throw ConfigError("fractions: '" + item + "' is not a number");
      }
      plan.fractions.push_back(value);
    }
  }

  cfg.input = kv.GetPath("input.csv");
  cfg.schema.id_column = kv.GetString("input.id_column", cfg.schema.id_column);
  cfg.schema.text_column =
      kv.GetString("input.text_column", cfg.schema.text_column);
  cfg.schema.label_columns =
      kv.GetList("input.label_columns", cfg.schema.label_columns);

  cfg.normalization = kv.GetPath("text.normalization");
  cfg.clean.keep_apostrophes = kv.GetBool("text.keep_apostrophes", false);
  cfg.lexicon = kv.GetPath("lexicon.synonyms");
  cfg.stopwords = kv.GetPath("lexicon.stopwords");
  const auto data = DefaultDataDir();
  if (!kv.Has("text.normalization")) cfg.normalization = data / "normalization.tsv";
  if (!kv.Has("lexicon.synonyms")) cfg.lexicon = data / "lexicon.tsv";
  if (!kv.Has("lexicon.stopwords")) cfg.stopwords = data / "stopwords.txt";

  plan.split.test_fraction =
      kv.GetDouble("split.test_fraction", plan.split.test_fraction);
  plan.split.small_train_fraction =
      kv.GetDouble("split.small_train_fraction", plan.split.small_train_fraction);
  plan.split.stratified = kv.GetBool("split.stratified", plan.split.stratified);

  plan.aug.alpha = kv.GetDouble("eda.alpha", plan.aug.alpha);
  plan.aug.n_aug = static_cast<int>(kv.GetInt("eda.n_aug", plan.aug.n_aug));
  const std::string op = kv.GetString("eda.op", "random");
  if (op != "random") plan.aug.fixed_op = ParseEdaOp(op);

  plan.bt_langs = LanguagesOf(kv, "bt.languages", plan.bt_langs);
  plan.bt.leg.source_language =
      LanguageCode(kv.GetString("bt.source", plan.bt.leg.source_language.str()));
  plan.bt.max_failure_fraction =
      kv.GetDouble("bt.max_failure_fraction", plan.bt.max_failure_fraction);
  plan.bt.workers = static_cast<unsigned>(kv.GetUnsigned("bt.workers", 1));
  plan.bt.leg.retry.attempts =
      static_cast<int>(kv.GetInt("bt.attempts", plan.bt.leg.retry.attempts));
  plan.bt.leg.retry.initial_backoff = std::chrono::milliseconds(
      kv.GetInt("bt.backoff_ms", plan.bt.leg.retry.initial_backoff.count()));
  plan.bt.leg.retry.multiplier =
      kv.GetDouble("bt.backoff_multiplier", plan.bt.leg.retry.multiplier);
  if (plan.bt.leg.retry.attempts < 1) throw ConfigError("bt.attempts must be >= 1");
  if (!(plan.bt.max_failure_fraction >= 0.0 && plan.bt.max_failure_fraction <= 1.0)) {
    throw ConfigError("bt.max_failure_fraction must lie in [0, 1]");
  }

  ProviderSettings& provider = cfg.provider;
  provider.kind = kv.GetString("provider.kind", provider.kind);
  if (provider.kind != "mock" && provider.kind != "http") {
    throw ConfigError("provider.kind must be mock or http");
  }
  provider.script = kv.GetPath("provider.script");
  provider.identity_fallback =
      kv.GetBool("provider.identity_fallback", provider.identity_fallback);
  HttpProviderConfig& http = provider.http;
  http.provider_id = kv.GetString(
      "provider.id", provider.kind == "mock" ? "mock" : http.provider_id);
  http.endpoint = kv.GetString("provider.endpoint", http.endpoint);
  http.api_key_env = kv.GetString("provider.api_key_env", http.api_key_env);
  http.api_key_param = kv.GetString("provider.api_key_param", http.api_key_param);
  http.auth_header = kv.GetString("provider.auth_header", http.auth_header);
  http.auth_prefix = kv.GetString("provider.auth_prefix", http.auth_prefix);
  http.text_param = kv.GetString("provider.text_param", http.text_param);
  http.source_param = kv.GetString("provider.source_param", http.source_param);
  http.target_param = kv.GetString("provider.target_param", http.target_param);
  http.response_pointer =
      kv.GetString("provider.response_pointer", http.response_pointer);
  http.requests_per_second =
      kv.GetDouble("provider.requests_per_second", http.requests_per_second);
  http.max_request_chars =
      GetSize(kv, "provider.max_request_chars", http.max_request_chars);
  http.timeout = std::chrono::seconds(
      kv.GetInt("provider.timeout_s", http.timeout.count()));
  http.languages = LanguagesOf(kv, "provider.languages", http.languages);

  cfg.cache = kv.GetPath("cache.path");

  for (const LossKind kind : {LossKind::kLogistic, LossKind::kHinge}) {
    const std::string prefix = "train." + std::string(LossKindName(kind)) + ".";
    TrainConfig train = TrainConfig::Defaults(kind);
    train.epochs = static_cast<int>(kv.GetInt(prefix + "epochs", train.epochs));
    train.lr0 = kv.GetDouble(prefix + "lr0", train.lr0);
    train.l2_lambda = kv.GetDouble(prefix + "l2_lambda", train.l2_lambda);
    // The default decay follows lr0 * lambda unless set explicitly.
    train.decay = kv.GetDouble(prefix + "decay", train.lr0 * train.l2_lambda);
    if (const auto v = kv.Get(prefix + "schedule")) train.schedule = ParseSchedule(*v);
    if (const auto v = kv.Get(prefix + "class_weighting")) {
      train.class_weighting = ParseWeighting(*v);
    }
    train.Validate();
    plan.train[kind] = train;
  }

  plan.tfidf.min_df = GetSize(kv, "tfidf.min_df", plan.tfidf.min_df);
  plan.tfidf.max_features =
      GetSize(kv, "tfidf.max_features", plan.tfidf.max_features);
  if (const auto v = kv.Get("tfidf.norm")) plan.tfidf.norm = ParseNorm(*v);
  if (plan.tfidf.min_df == 0) throw ConfigError("tfidf.min_df must be >= 1");

  plan.top_k = GetSize(kv, "report.top_k", plan.top_k);
  plan.threshold = kv.GetDouble("report.threshold", plan.threshold);
  cfg.sweep = kv.GetBool("report.sweep", cfg.sweep);
  cfg.output_dir = kv.GetPath("output.dir");

  plan.Validate();
  // Keys that cannot change any report are left out of the hash.
  KeyValueConfig hashed = kv;
  for (const char* key : {"threads", "bt.workers", "output.dir"}) hashed.Erase(key);
  cfg.hash = hashed.HashHex();
  return cfg;
}

ExperimentConfig ExperimentConfig::Load(const std::filesystem::path& path) {
  return FromKeyValues(KeyValueConfig::Load(path));
}

ExperimentRun RunExperiment(const ExperimentConfig& cfg) {
  if (cfg.input.empty()) throw ConfigError("input.csv is not set");
  const TextCleaner cleaner(NormalizationTable::Load(cfg.normalization), cfg.clean);
  const Corpus corpus = LoadCsv(cfg.input, cfg.schema, cleaner);

  std::optional<SynonymLexicon> lexicon;
  if (cfg.plan.NeedsEda()) lexicon = SynonymLexicon::Load(cfg.lexicon, cfg.stopwords);
  std::unique_ptr<Translator> translator;
  std::optional<TranslationCache> cache;
  if (cfg.plan.NeedsBacktranslation()) {
    translator = MakeTranslator(cfg.provider);
    if (!cfg.cache.empty()) cache.emplace(cfg.cache);
  }

  ExperimentResources resources;
  resources.cleaner = &cleaner;
  resources.lexicon = lexicon ? &*lexicon : nullptr;
  resources.translator = translator.get();
  resources.cache = cache ? &*cache : nullptr;

  ExperimentRun run;
  run.results = RunPlan(cfg.plan, corpus, resources);
  run.results.meta.config_hash = cfg.hash;
  if (cfg.sweep) run.sweep = SweepFractions(cfg.plan, corpus, resources);
  return run;
}

std::unique_ptr<Translator> MakeTranslator(const ProviderSettings& settings) {
  if (settings.kind == "http") {
    return std::make_unique<HttpTranslator>(settings.http);
  }
  auto mock = std::make_unique<ScriptedTranslator>(settings.http.provider_id,
                                                   settings.identity_fallback);
  if (!settings.script.empty()) mock->LoadScript(settings.script);
  if (!settings.http.languages.empty()) {
    mock->SetSupportedLanguages(settings.http.languages);
  }
  return mock;
}

std::filesystem::path DefaultDataDir() {
  if (const char* env = std::getenv("TEXTAUG_DATA_DIR"); env && *env) {
    return env;
  }
  return TEXTAUG_DEFAULT_DATA_DIR;
}

}  // namespace textaug
