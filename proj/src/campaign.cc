// Copyright 2026 The sumrobust Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sumrobust/campaign.h"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <mutex>

#include "absl/container/flat_hash_set.h"
#include "fmt/format.h"
#include "fmt/printf.h"
#include "json.hpp"
#include "sumrobust/rng.h"
#include "sumrobust/status_macros.h"
#include "sumrobust/string_containers.h"
#include "sumrobust/textops.h"
#include "sumrobust/util.h"

namespace sumrobust {
namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

absl::Status CheckKeys(const json& j, std::string_view where,
                       std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      return absl::InvalidArgumentError(fmt::format("unknown key {}{}", where, key));
    }
  }
  return absl::OkStatus();
}

template <typename T>
absl::Status Get(const json& j, std::string_view key, T& out) {
  if (!j.contains(key)) return absl::OkStatus();
  try {
    out = j.at(std::string(key)).get<T>();
  } catch (const json::exception& e) {
    return absl::InvalidArgumentError(fmt::format("config key {}: {}", key, e.what()));
  }
  return absl::OkStatus();
}

std::string Resolve(std::string_view base_dir, const std::string& path) {
  if (path.empty() || fs::path(path).is_absolute()) return path;
  return (fs::path(base_dir) / path).lexically_normal().string();
}

std::string UtcTimestamp(std::chrono::system_clock::time_point t, bool compact) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), compact ? "%Y%m%dT%H%M%SZ" : "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

absl::StatusOr<std::string> MakeRunDir(const std::string& output_dir, uint64_t seed,
                                       std::chrono::system_clock::time_point start) {
  const std::string stem = fmt::format("run-{}-{}", UtcTimestamp(start, true), seed);
  std::error_code ec;
  fs::create_directories(output_dir, ec);
  if (ec)
    return absl::PermissionDeniedError(
        fmt::format("cannot create {}: {}", output_dir, ec.message()));
  for (int suffix = 0; suffix < 1000; ++suffix) {
    const fs::path dir =
        fs::path(output_dir) / (suffix == 0 ? stem : fmt::format("{}-{}", stem, suffix));
    if (fs::create_directory(dir, ec)) return dir.string();
    if (ec) return absl::PermissionDeniedError(fmt::format("cannot create {}", dir.string()));
  }
  return absl::AlreadyExistsError("too many runs with the same timestamp");
}

ordered_json RecordToJson(const PerturbationRecord& r) {
  ordered_json j;
  j["kind"] = PerturbationKindName(r.kind);
  j["target_word"] = r.target_word.has_value() ? json(*r.target_word) : json(nullptr);
  j["original"] = r.original;
  j["replacement"] = r.replacement;
  j["document"] = r.location.document;
  j["sentence"] = r.location.sentence.has_value() ? json(*r.location.sentence) : json(nullptr);
  j["word"] = r.location.word.has_value() ? json(*r.location.word) : json(nullptr);
  return j;
}

ordered_json ConfigToJson(const CampaignConfig& c) {
  ordered_json j;
  j["corpus"] = c.corpus_path;
  j["max_clusters"] = c.max_clusters.has_value() ? json(*c.max_clusters) : json(nullptr);
  j["token_budget"] = c.token_budget;
  ordered_json s;
  s["backend"] = SummarizerBackendName(c.summarizer.backend);
  s["k"] = c.summarizer.k;
  s["endpoint"] = c.summarizer.endpoint;
  s["model"] = c.summarizer.model_name;
  s["prompt_template"] = c.summarizer.prompt_template;
  s["auth_token_env"] = c.summarizer.auth_token_env;
  s["timeout_ms"] = c.summarizer.timeout.count();
  s["max_retries"] = c.summarizer.max_retries;
  s["max_concurrency"] = c.summarizer.max_concurrency;
  s["backoff_base_ms"] = c.summarizer.backoff_base.count();
  j["summarizer"] = s;
  std::vector<std::string> attacks;
  for (PerturbationKind k : c.attacks) attacks.emplace_back(PerturbationKindName(k));
  j["attacks"] = attacks;
  j["m"] = c.m;
  j["k_words"] = c.k_words;
  j["single_word"] = c.single_word;
  j["thresholds"] = {{"inclusion", c.inclusion_threshold},
                     {"extractive", c.extractive_threshold},
                     {"sentiment_match", c.sentiment_match_threshold}};
  j["seed"] = c.seed;
  j["output_dir"] = c.output_dir;
  j["concurrency"] = c.concurrency;
  j["providers"] = {{"thesaurus", c.thesaurus_path},
                    {"paraphrases", c.paraphrase_path},
                    {"homoglyphs", c.homoglyph_path},
                    {"allow_case_homoglyphs", c.allow_case_homoglyphs}};
  return j;
}

struct Outcome {
  bool ok = false;
  std::string error;
  SummaryResult summary;
  LeadTarget lead;
  std::vector<PerturbationRecord> records;
};

double Mean(double sum, size_t n) { return n == 0 ? 0.0 : sum / static_cast<double>(n); }

}  // namespace

absl::Status CampaignConfig::Validate() const {
  if (corpus_path.empty()) return absl::InvalidArgumentError("config needs a corpus path");
  if (output_dir.empty()) return absl::InvalidArgumentError("config needs an output_dir");
  if (attacks.empty()) return absl::InvalidArgumentError("config needs at least one attack");
  if (m < 1) return absl::InvalidArgumentError("m must be at least 1");
  if (k_words < 1) return absl::InvalidArgumentError("k_words must be at least 1");
  if (concurrency < 1) return absl::InvalidArgumentError("concurrency must be at least 1");
  for (double t : {inclusion_threshold, extractive_threshold, sentiment_match_threshold}) {
    if (!(t >= 0.0 && t <= 1.0)) return absl::InvalidArgumentError("thresholds must be in [0, 1]");
  }
  absl::flat_hash_set<PerturbationKind> seen;
  for (PerturbationKind k : attacks) {
    if (!seen.insert(k).second) {
      return absl::InvalidArgumentError(
          fmt::format("attack {} listed twice", PerturbationKindName(k)));
    }
  }
  return summarizer.Validate();
}

absl::StatusOr<CampaignConfig> ParseCampaignConfig(std::string_view text,
                                                   std::string_view base_dir) {
  const json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) {
    return absl::InvalidArgumentError("campaign config must be a JSON object");
  }
  RETURN_IF_ERROR(
      CheckKeys(j, "",
                {"corpus", "max_clusters", "token_budget", "summarizer", "attacks", "m", "k_words",
                 "single_word", "thresholds", "seed", "output_dir", "concurrency", "providers"}));
  CampaignConfig c;
  RETURN_IF_ERROR(Get(j, "corpus", c.corpus_path));
  c.corpus_path = Resolve(base_dir, c.corpus_path);
  if (j.contains("max_clusters") && !j["max_clusters"].is_null()) {
    size_t max = 0;
    RETURN_IF_ERROR(Get(j, "max_clusters", max));
    c.max_clusters = max;
  }
  RETURN_IF_ERROR(Get(j, "token_budget", c.token_budget));
  RETURN_IF_ERROR(Get(j, "m", c.m));
  RETURN_IF_ERROR(Get(j, "k_words", c.k_words));
  RETURN_IF_ERROR(Get(j, "single_word", c.single_word));
  RETURN_IF_ERROR(Get(j, "seed", c.seed));
  RETURN_IF_ERROR(Get(j, "output_dir", c.output_dir));
  c.output_dir = Resolve(base_dir, c.output_dir);
  RETURN_IF_ERROR(Get(j, "concurrency", c.concurrency));

  if (j.contains("summarizer")) {
    const json& s = j["summarizer"];
    if (!s.is_object()) return absl::InvalidArgumentError("summarizer must be an object");
    RETURN_IF_ERROR(
        CheckKeys(s, "summarizer.",
                  {"backend", "k", "endpoint", "model", "prompt_template", "auth_token_env",
                   "timeout_ms", "max_retries", "max_concurrency", "backoff_base_ms"}));
    std::string backend = "lead_k";
    RETURN_IF_ERROR(Get(s, "backend", backend));
    ASSIGN_OR_RETURN(c.summarizer.backend, ParseSummarizerBackend(backend));
    RETURN_IF_ERROR(Get(s, "k", c.summarizer.k));
    RETURN_IF_ERROR(Get(s, "endpoint", c.summarizer.endpoint));
    RETURN_IF_ERROR(Get(s, "model", c.summarizer.model_name));
    RETURN_IF_ERROR(Get(s, "prompt_template", c.summarizer.prompt_template));
    RETURN_IF_ERROR(Get(s, "auth_token_env", c.summarizer.auth_token_env));
    int64_t timeout_ms = c.summarizer.timeout.count();
    RETURN_IF_ERROR(Get(s, "timeout_ms", timeout_ms));
    c.summarizer.timeout = std::chrono::milliseconds(timeout_ms);
    RETURN_IF_ERROR(Get(s, "max_retries", c.summarizer.max_retries));
    RETURN_IF_ERROR(Get(s, "max_concurrency", c.summarizer.max_concurrency));
    int64_t backoff_ms = c.summarizer.backoff_base.count();
    RETURN_IF_ERROR(Get(s, "backoff_base_ms", backoff_ms));
    c.summarizer.backoff_base = std::chrono::milliseconds(backoff_ms);
  }

  if (j.contains("attacks")) {
    const json& a = j["attacks"];
    if (a.is_string() && a.get<std::string>() == "all") {
      c.attacks.assign(kAllPerturbationKinds.begin(), kAllPerturbationKinds.end());
    } else if (a.is_array()) {
      for (const json& name : a) {
        if (!name.is_string()) return absl::InvalidArgumentError("attacks must be strings");
        ASSIGN_OR_RETURN(PerturbationKind kind, ParsePerturbationKind(name.get<std::string>()));
        c.attacks.push_back(kind);
      }
    } else {
      return absl::InvalidArgumentError("attacks must be a list of kinds or \"all\"");
    }
  }

  if (j.contains("thresholds")) {
    const json& t = j["thresholds"];
    if (!t.is_object()) return absl::InvalidArgumentError("thresholds must be an object");
    RETURN_IF_ERROR(CheckKeys(t, "thresholds.", {"inclusion", "extractive", "sentiment_match"}));
    RETURN_IF_ERROR(Get(t, "inclusion", c.inclusion_threshold));
    RETURN_IF_ERROR(Get(t, "extractive", c.extractive_threshold));
    RETURN_IF_ERROR(Get(t, "sentiment_match", c.sentiment_match_threshold));
  }

  if (j.contains("providers")) {
    const json& p = j["providers"];
    if (!p.is_object()) return absl::InvalidArgumentError("providers must be an object");
    RETURN_IF_ERROR(CheckKeys(p, "providers.",
                              {"thesaurus", "paraphrases", "homoglyphs", "allow_case_homoglyphs"}));
    RETURN_IF_ERROR(Get(p, "thesaurus", c.thesaurus_path));
    RETURN_IF_ERROR(Get(p, "paraphrases", c.paraphrase_path));
    RETURN_IF_ERROR(Get(p, "homoglyphs", c.homoglyph_path));
    RETURN_IF_ERROR(Get(p, "allow_case_homoglyphs", c.allow_case_homoglyphs));
    c.thesaurus_path = Resolve(base_dir, c.thesaurus_path);
    c.paraphrase_path = Resolve(base_dir, c.paraphrase_path);
    c.homoglyph_path = Resolve(base_dir, c.homoglyph_path);
  }
  RETURN_IF_ERROR(c.Validate());
  return c;
}

absl::StatusOr<CampaignConfig> LoadCampaignConfig(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  return ParseCampaignConfig(text, fs::path(path).parent_path().string());
}

std::string EvaluationToJson(const EvaluationRecord& r) {
  ordered_json j;
  j["cluster_id"] = r.cluster_id;
  j["variant"] = r.variant;
  j["ok"] = r.ok;
  if (!r.ok) j["error"] = r.error;
  j["included"] = r.included;
  j["has_reference"] = r.has_reference;
  j["rouge1"] = r.rouge.rouge1;
  j["rouge2"] = r.rouge.rouge2;
  j["rougeL"] = r.rouge.rougeL;
  return j.dump();
}

absl::StatusOr<std::vector<EvaluationRecord>> ParseEvaluations(std::string_view jsonl) {
  std::vector<EvaluationRecord> out;
  size_t line_number = 0;
  for (std::string_view line : Split(jsonl, '\n')) {
    ++line_number;
    if (StripWhitespace(line).empty()) continue;
    const json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) {
      return absl::InvalidArgumentError(fmt::format("evaluations line {}: bad JSON", line_number));
    }
    try {
      EvaluationRecord r;
      r.cluster_id = j.at("cluster_id").get<std::string>();
      r.variant = j.at("variant").get<std::string>();
      r.ok = j.at("ok").get<bool>();
      r.error = j.value("error", "");
      r.included = j.at("included").get<bool>();
      r.has_reference = j.at("has_reference").get<bool>();
      r.rouge.rouge1 = j.at("rouge1").get<double>();
      r.rouge.rouge2 = j.at("rouge2").get<double>();
      r.rouge.rougeL = j.at("rougeL").get<double>();
      out.push_back(std::move(r));
    } catch (const json::exception& e) {
      return absl::InvalidArgumentError(
          fmt::format("evaluations line {}: {}", line_number, e.what()));
    }
  }
  return out;
}

absl::StatusOr<CampaignReport> AggregateEvaluations(std::span<const EvaluationRecord> records,
                                                    std::span<const PerturbationKind> attacks,
                                                    std::string backend_id, uint64_t seed) {
  struct Tally {
    size_t total = 0;
    size_t ok = 0;
    size_t excluded = 0;
    size_t with_reference = 0;
    RougeF1 rouge_sum;
  };
  StringMap<Tally> tallies;
  for (const EvaluationRecord& r : records) {
    Tally& t = tallies[r.variant];
    ++t.total;
    if (!r.ok) continue;
    ++t.ok;
    if (!r.included) ++t.excluded;
    if (r.has_reference) {
      ++t.with_reference;
      t.rouge_sum.rouge1 += r.rouge.rouge1;
      t.rouge_sum.rouge2 += r.rouge.rouge2;
      t.rouge_sum.rougeL += r.rouge.rougeL;
    }
  }
  auto inclusion = [](const Tally& t) {
    if (t.ok == 0) return 0.0;
    return 100.0 * (1.0 - static_cast<double>(t.excluded) / static_cast<double>(t.ok));
  };
  auto rouge = [](const Tally& t) {
    return RougeF1{.rouge1 = Mean(t.rouge_sum.rouge1, t.with_reference),
                   .rouge2 = Mean(t.rouge_sum.rouge2, t.with_reference),
                   .rougeL = Mean(t.rouge_sum.rougeL, t.with_reference)};
  };
  const Tally& base = tallies[std::string(kBaselineVariant)];
  if (base.ok == 0) return absl::FailedPreconditionError("no baseline summary succeeded");

  CampaignReport report;
  report.backend_id = std::move(backend_id);
  report.seed = seed;
  const RougeF1 before = rouge(base);
  for (PerturbationKind kind : attacks) {
    const Tally& t = tallies[std::string(PerturbationKindName(kind))];
    AttackRow row;
    row.attack = kind;
    row.n = t.ok;
    row.failures = t.total - t.ok;
    row.inclusion_before = inclusion(base);
    row.inclusion_after = inclusion(t);
    row.rouge_before = before;
    row.rouge_after = rouge(t);
    row.rouge_delta = {.rouge1 = row.rouge_after.rouge1 - before.rouge1,
                       .rouge2 = row.rouge_after.rouge2 - before.rouge2,
                       .rougeL = row.rouge_after.rougeL - before.rougeL};
    report.rows.push_back(row);
  }
  return report;
}

absl::StatusOr<CampaignRun> RunPerturbationCampaign(const CampaignConfig& config,
                                                    std::stop_token stop) {
  RETURN_IF_ERROR(config.Validate());
  ASSIGN_OR_RETURN(std::unique_ptr<Summarizer> summarizer, MakeSummarizer(config.summarizer));
  return RunPerturbationCampaign(config, *summarizer, stop);
}

absl::StatusOr<CampaignRun> RunPerturbationCampaign(const CampaignConfig& config,
                                                    const Summarizer& summarizer,
                                                    std::stop_token stop) {
  RETURN_IF_ERROR(config.Validate());
  const auto started = std::chrono::system_clock::now();

  ASSIGN_OR_RETURN(std::string corpus_bytes, ReadFile(config.corpus_path));
  ASSIGN_OR_RETURN(std::vector<DocumentCluster> corpus,
                   ParseCorpus(corpus_bytes, config.max_clusters));
  if (corpus.empty()) return absl::InvalidArgumentError("corpus is empty");
  for (DocumentCluster& c : corpus) c = TruncateToTokenBudget(std::move(c), config.token_budget);

  ThesaurusSynonymProvider thesaurus = ThesaurusSynonymProvider::Builtin();
  if (!config.thesaurus_path.empty()) {
    ASSIGN_OR_RETURN(std::string text, ReadFile(config.thesaurus_path));
    RETURN_IF_ERROR(thesaurus.MergeJson(text));
  }
  MapParaphraseProvider paraphrases = MapParaphraseProvider::Builtin();
  if (!config.paraphrase_path.empty()) {
    ASSIGN_OR_RETURN(std::string text, ReadFile(config.paraphrase_path));
    RETURN_IF_ERROR(paraphrases.MergeJson(text));
  }
  HomoglyphTable homoglyphs = HomoglyphTable::Default(config.allow_case_homoglyphs);
  if (!config.homoglyph_path.empty()) RETURN_IF_ERROR(homoglyphs.MergeFile(config.homoglyph_path));

  const std::vector<std::string> documents = AllDocuments(corpus);
  ASSIGN_OR_RETURN(TfidfModel model, TfidfModel::Fit(documents));
  AttackConfig attack_config{
      .m = config.m,
      .words_per_sentence = config.k_words,
      .single_word = config.single_word,
      .providers = {.synonyms = &thesaurus, .paraphrases = &paraphrases, .homoglyphs = &homoglyphs},
      .model = &model};

  ASSIGN_OR_RETURN(std::string run_dir, MakeRunDir(config.output_dir, config.seed, started));
  const fs::path dir(run_dir);
  const std::string backend_id = summarizer.id();

  ordered_json manifest;
  manifest["seed"] = config.seed;
  manifest["backend_id"] = backend_id;
  manifest["corpus_sha256"] = Sha256Hex(corpus_bytes);
  manifest["clusters"] = corpus.size();
  manifest["started_at"] = UtcTimestamp(started, false);
  manifest["config"] = ConfigToJson(config);
  RETURN_IF_ERROR(WriteFile((dir / "manifest.json").string(), manifest.dump(2) + "\n"));

  // Variant 0 is the baseline; variant v > 0 is attacks[v - 1].
  const size_t variants = config.attacks.size() + 1;
  std::vector<std::vector<Outcome>> outcomes(corpus.size(), std::vector<Outcome>(variants));
  std::ofstream summaries_out(dir / "summaries.jsonl", std::ios::binary | std::ios::app);
  if (!summaries_out) return absl::PermissionDeniedError("cannot open summaries.jsonl");
  std::mutex persist_mu;
  auto variant_name = [&](size_t v) {
    return v == 0 ? std::string(kBaselineVariant)
                  : std::string(PerturbationKindName(config.attacks[v - 1]));
  };

  ParallelFor(corpus.size(), config.concurrency, [&](size_t c) {
    const DocumentCluster& cluster = corpus[c];
    for (size_t v = 0; v < variants; ++v) {
      if (stop.stop_requested()) return;
      Outcome& out = outcomes[c][v];
      const DocumentCluster* input = &cluster;
      std::optional<PerturbedCluster> perturbed;
      if (v == 0) {
        auto lead = ExtractLead(cluster, config.m);
        if (!lead.ok()) {
          out.error = std::string(lead.status().message());
          continue;
        }
        out.lead = *std::move(lead);
      } else {
        const PerturbationKind kind = config.attacks[v - 1];
        const uint64_t seed = DeriveSeed(DeriveSeed(config.seed, c), static_cast<uint64_t>(kind));
        auto applied = ApplyAttack(cluster, kind, attack_config, seed);
        if (!applied.ok()) {
          out.error = std::string(applied.status().message());
          continue;
        }
        perturbed = *std::move(applied);
        out.lead = perturbed->perturbed_lead;
        out.records = perturbed->records;
        input = &perturbed->cluster;
      }
      auto summary = summarizer.Summarize(*input);
      if (!summary.ok()) {
        out.error = std::string(summary.status().message());
        continue;
      }
      out.summary = *std::move(summary);
      out.ok = true;
      ordered_json line;
      line["cluster_id"] = cluster.id;
      line["variant"] = variant_name(v);
      line["backend_id"] = out.summary.backend_id;
      line["summary"] = out.summary.summary;
      line["latency_ms"] = out.summary.latency_ms;
      line["attempt_count"] = out.summary.attempt_count;
      line["truncated"] = out.summary.truncated;
      const std::string serialized = line.dump() + "\n";
      std::lock_guard lock(persist_mu);
      summaries_out << serialized;
      summaries_out.flush();
    }
  });
  summaries_out.close();
  if (stop.stop_requested()) {
    return absl::CancelledError(
        fmt::format("campaign cancelled; partial summaries in {}", run_dir));
  }

  std::string perturbations;
  std::string evaluations;
  std::vector<EvaluationRecord> records;
  for (size_t c = 0; c < corpus.size(); ++c) {
    const DocumentCluster& cluster = corpus[c];
    for (size_t v = 0; v < variants; ++v) {
      const Outcome& out = outcomes[c][v];
      if (v > 0) {
        ordered_json p;
        p["cluster_id"] = cluster.id;
        p["attack"] = variant_name(v);
        p["ok"] = out.ok;
        if (!out.error.empty()) p["error"] = out.error;
        ordered_json recs = ordered_json::array();
        for (const PerturbationRecord& r : out.records) recs.push_back(RecordToJson(r));
        p["records"] = std::move(recs);
        p["perturbed_lead"] = out.lead.sentences;
        fmt::format_to(std::back_inserter(perturbations), "{}\n", p.dump());
      }
      EvaluationRecord e{
          .cluster_id = cluster.id, .variant = variant_name(v), .ok = out.ok, .error = out.error};
      if (out.ok) {
        e.included = LeadIncluded(out.summary.summary, out.lead, config.inclusion_threshold);
        if (cluster.reference_summary.has_value()) {
          e.has_reference = true;
          const RougeScores scores = Rouge(out.summary.summary, *cluster.reference_summary);
          e.rouge = {
              .rouge1 = scores.rouge1.f1, .rouge2 = scores.rouge2.f1, .rougeL = scores.rougeL.f1};
        }
      }
      fmt::format_to(std::back_inserter(evaluations), "{}\n", EvaluationToJson(e));
      records.push_back(std::move(e));
    }
  }
  RETURN_IF_ERROR(WriteFile((dir / "perturbations.jsonl").string(), perturbations));
  RETURN_IF_ERROR(WriteFile((dir / "evaluations.jsonl").string(), evaluations));

  ASSIGN_OR_RETURN(CampaignReport report,
                   AggregateEvaluations(records, config.attacks, backend_id, config.seed));
  RETURN_IF_ERROR(WriteFile((dir / "report.csv").string(), RenderCsv(report)));
  RETURN_IF_ERROR(WriteFile((dir / "report.txt").string(), RenderTable(report)));

  ordered_json failures;
  for (size_t v = 0; v < variants; ++v) {
    size_t failed = 0;
    for (size_t c = 0; c < corpus.size(); ++c) failed += outcomes[c][v].ok ? 0 : 1;
    failures[variant_name(v)] = failed;
  }
  manifest["failures"] = failures;
  manifest["finished_at"] = UtcTimestamp(std::chrono::system_clock::now(), false);
  RETURN_IF_ERROR(WriteFile((dir / "manifest.json").string(), manifest.dump(2) + "\n"));

  return CampaignRun{.report = std::move(report), .run_dir = run_dir, .clusters = corpus.size()};
}

absl::StatusOr<CampaignReport> LoadRunReport(const std::string& run_dir) {
  const fs::path dir(run_dir);
  ASSIGN_OR_RETURN(std::string manifest_text, ReadFile((dir / "manifest.json").string()));
  const json manifest = json::parse(manifest_text, nullptr, /*allow_exceptions=*/false);
  if (manifest.is_discarded() || !manifest.contains("config")) {
    return absl::DataLossError(fmt::format("{}: unreadable manifest", run_dir));
  }
  std::vector<PerturbationKind> attacks;
  std::string backend_id;
  uint64_t seed = 0;
  try {
    for (const json& name : manifest.at("config").at("attacks")) {
      ASSIGN_OR_RETURN(PerturbationKind kind, ParsePerturbationKind(name.get<std::string>()));
      attacks.push_back(kind);
    }
    backend_id = manifest.at("backend_id").get<std::string>();
    seed = manifest.at("seed").get<uint64_t>();
  } catch (const json::exception& e) {
    return absl::DataLossError(fmt::format("{}: manifest: {}", run_dir, e.what()));
  }
  ASSIGN_OR_RETURN(std::string eval_text, ReadFile((dir / "evaluations.jsonl").string()));
  ASSIGN_OR_RETURN(std::vector<EvaluationRecord> records, ParseEvaluations(eval_text));
  return AggregateEvaluations(records, attacks, std::move(backend_id), seed);
}

absl::StatusOr<std::vector<GeneratedSummary>> ParseGeneratedSummaries(std::string_view jsonl) {
  std::vector<GeneratedSummary> out;
  StringSet seen;
  size_t line_number = 0;
  for (std::string_view line : Split(jsonl, '\n')) {
    ++line_number;
    if (StripWhitespace(line).empty()) continue;
    const json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) {
      return absl::InvalidArgumentError(fmt::format("summaries line {}: bad JSON", line_number));
    }
    const char* id_key = j.contains("id") ? "id" : "cluster_id";
    if (!j.contains(id_key) || !j[id_key].is_string() || !j.contains("summary") ||
        !j["summary"].is_string()) {
      return absl::InvalidArgumentError(
          fmt::format("summaries line {}: needs string id and summary", line_number));
    }
    GeneratedSummary s{.id = j[id_key].get<std::string>(),
                       .summary = j["summary"].get<std::string>()};
    if (!seen.insert(s.id).second) {
      return absl::InvalidArgumentError(
          fmt::format("summaries line {}: duplicate id {}", line_number, s.id));
    }
    out.push_back(std::move(s));
  }
  return out;
}

absl::StatusOr<std::vector<GeneratedSummary>> LoadGeneratedSummaries(const std::string& path) {
  ASSIGN_OR_RETURN(std::string text, ReadFile(path));
  return ParseGeneratedSummaries(text);
}

absl::StatusOr<PoisonEvalResult> RunPoisonEval(std::span<const GeneratedSummary> summaries,
                                               std::span<const DocumentCluster> corpus,
                                               const PoisonEvalOptions& options) {
  if (summaries.empty()) return absl::InvalidArgumentError("no summaries to evaluate");
  StringMap<const DocumentCluster*> by_id;
  for (const DocumentCluster& c : corpus) by_id[c.id] = &c;
  std::vector<std::string> missing;
  for (const GeneratedSummary& s : summaries) {
    if (!by_id.contains(s.id)) missing.push_back(s.id);
  }
  if (!missing.empty()) {
    return absl::NotFoundError(
        fmt::format("summary ids not in corpus: {}", fmt::to_string(fmt::join(missing, ", "))));
  }
  const std::vector<std::string> sentences = AllSentences(corpus);
  ASSIGN_OR_RETURN(TfidfModel model, TfidfModel::Fit(sentences));
  const SentimentLexicon& lexicon =
      options.lexicon != nullptr ? *options.lexicon : SentimentLexicon::Builtin();

  PoisonEvalResult result;
  PoisonEvalRow& row = result.row;
  row.rate = options.rate;
  row.n = summaries.size();
  double toxicity_sum = 0.0;
  for (const GeneratedSummary& s : summaries) {
    const DocumentCluster& cluster = *by_id[s.id];
    SummaryEvaluation e;
    e.id = s.id;
    e.sentiment = SentimentInversionRate(s.summary, cluster, model, lexicon,
                                         options.sentiment_match_threshold);
    if (e.sentiment.rate.has_value()) ++row.n_applicable;
    if (e.sentiment.inverted) ++row.inverted;
    auto extractive = Extractiveness(s.summary, cluster, model, options.extractive_threshold);
    if (extractive.ok()) {
      e.extractiveness = *std::move(extractive);
      if (e.extractiveness.is_extractive) ++row.extractive;
    }
    if (options.toxicity != nullptr) {
      ASSIGN_OR_RETURN(ToxicityScores tox, options.toxicity->Score(s.summary));
      e.severe_toxicity = tox.severe_toxicity();
      toxicity_sum += *e.severe_toxicity;
      row.toxicity_fallback = tox.fallback;
    }
    result.per_summary.push_back(std::move(e));
  }
  row.pct_inverted = 100.0 * static_cast<double>(row.inverted) / static_cast<double>(row.n);
  row.pct_extractive = 100.0 * static_cast<double>(row.extractive) / static_cast<double>(row.n);
  if (options.toxicity != nullptr)
    row.mean_severe_toxicity = toxicity_sum / static_cast<double>(row.n);
  return result;
}

std::string PoisonEvalCsvHeader() {
  return "rate,n,n_applicable,pct_inverted,pct_extractive,mean_severe_toxicity\n";
}

std::string PoisonEvalCsvRow(const PoisonEvalRow& row) {
  return fmt::format(
      "{},{},{},{},{},{}\n", row.rate.has_value() ? fmt::sprintf("%.17g", *row.rate) : "", row.n,
      row.n_applicable, fmt::sprintf("%.17g", row.pct_inverted),
      fmt::sprintf("%.17g", row.pct_extractive),
      row.mean_severe_toxicity.has_value() ? fmt::sprintf("%.17g", *row.mean_severe_toxicity) : "");
}

}  // namespace sumrobust
