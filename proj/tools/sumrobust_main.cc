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

// Command-line front end: perturbation campaigns, poisoning, influence.

#include <csignal>
#include <iostream>
#include <stop_token>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "fmt/format.h"
#include "fmt/printf.h"
#include "sumrobust/campaign.h"
#include "sumrobust/corpus.h"
#include "sumrobust/gradient_dump.h"
#include "sumrobust/influence.h"
#include "sumrobust/poison.h"
#include "sumrobust/report.h"
#include "sumrobust/status_macros.h"
#include "sumrobust/util.h"

namespace sumrobust {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

std::stop_source& InterruptSource() {
  static std::stop_source source;
  return source;
}

extern "C" void OnInterrupt(int) { InterruptSource().request_stop(); }

absl::Status AttackRun(const CampaignConfig& config) {
  std::signal(SIGINT, OnInterrupt);
  ASSIGN_OR_RETURN(CampaignRun run, RunPerturbationCampaign(config, InterruptSource().get_token()));
  std::cout << RenderTable(run.report) << "\nrun directory: " << run.run_dir << "\n";
  return absl::OkStatus();
}

absl::Status AttackReport(const std::string& run_dir, const std::string& format_name) {
  ASSIGN_OR_RETURN(ReportFormat format, ParseReportFormat(format_name));
  ASSIGN_OR_RETURN(CampaignReport report, LoadRunReport(run_dir));
  std::cout << RenderReport(report, format);
  return absl::OkStatus();
}

absl::StatusOr<InfluenceScores> Score(const std::string& dump_path, bool exact, double damping,
                                      int workers) {
  ASSIGN_OR_RETURN(GradientDump dump, ReadDump(dump_path));
  const InfluenceConfig config{.damping_scale = damping, .workers = workers};
  return exact ? ExactScores(dump, config) : DatainfScores(dump, config);
}

struct PoisonPlanArgs {
  std::string dump;
  double rate = 0.0;
  std::string kind;
  std::string corpus;
  std::string out;
  uint64_t seed = 0;
  bool exact = false;
  double min_severe_toxicity = 0.0;
  std::string toxic_templates;
};

absl::Status PoisonPlanCommand(const PoisonPlanArgs& args) {
  ASSIGN_OR_RETURN(TransformKind kind, ParseTransformKind(args.kind));
  ASSIGN_OR_RETURN(InfluenceScores scores, Score(args.dump, args.exact, 0.1, 1));
  if (args.corpus.empty()) {
    const size_t count = PoisonCount(args.rate, scores.ranking.size());
    if (count == 0) return absl::InvalidArgumentError("rate selects no rows");
    for (size_t i = 0; i < count; ++i) std::cout << scores.ranking[i] << "\n";
    return absl::OkStatus();
  }
  ASSIGN_OR_RETURN(std::vector<DocumentCluster> corpus, LoadCorpus(args.corpus));
  ToxicTemplates templates = ToxicTemplates::Builtin();
  if (!args.toxic_templates.empty()) {
    ASSIGN_OR_RETURN(templates, ToxicTemplates::FromFile(args.toxic_templates));
  }
  RuleContrastiveTransformer contrastive;
  RuleToxicTransformer toxic(templates);
  const SummaryTransformer& transformer = kind == TransformKind::kContrastive
                                              ? static_cast<const SummaryTransformer&>(contrastive)
                                              : toxic;
  std::unique_ptr<ToxicityScorer> scorer;
  std::optional<PoisonGate> gate;
  if (args.min_severe_toxicity > 0.0) {
    ASSIGN_OR_RETURN(scorer, ToxicityScorer::Create(std::nullopt));
    gate = PoisonGate{.min_severe_toxicity = args.min_severe_toxicity, .scorer = scorer.get()};
  }
  ASSIGN_OR_RETURN(PoisonResult result,
                   BuildPoisonedDataset(corpus, scores, args.rate, transformer, args.seed, gate));
  if (args.out.empty()) {
    std::cout << PoisonManifestJson(result);
    return absl::OkStatus();
  }
  RETURN_IF_ERROR(WriteCorpus(result.corpus, args.out + ".jsonl"));
  RETURN_IF_ERROR(WriteFile(args.out + ".manifest.json", PoisonManifestJson(result)));
  std::cout << fmt::sprintf("poisoned %d of %d rows -> %s.jsonl\n", result.replacements.size(),
                            result.corpus.size(), args.out);
  return absl::OkStatus();
}

absl::Status PoisonEvalCommand(const std::string& summaries_path, const std::string& corpus_path,
                               std::optional<double> rate, bool toxicity, const std::string& out) {
  ASSIGN_OR_RETURN(std::vector<GeneratedSummary> summaries, LoadGeneratedSummaries(summaries_path));
  ASSIGN_OR_RETURN(std::vector<DocumentCluster> corpus, LoadCorpus(corpus_path));
  std::unique_ptr<ToxicityScorer> scorer;
  if (toxicity) {
    ASSIGN_OR_RETURN(scorer, ToxicityScorer::Create(std::nullopt));
  }
  PoisonEvalOptions options{.rate = rate, .toxicity = scorer.get()};
  ASSIGN_OR_RETURN(PoisonEvalResult result, RunPoisonEval(summaries, corpus, options));
  const std::string csv = PoisonEvalCsvHeader() + PoisonEvalCsvRow(result.row);
  if (out.empty()) {
    std::cout << csv;
  } else {
    RETURN_IF_ERROR(WriteFile(out, csv));
  }
  return absl::OkStatus();
}

absl::Status InfluenceScore(const std::string& dump_path, bool exact, double damping, int workers,
                            size_t top) {
  ASSIGN_OR_RETURN(InfluenceScores scores, Score(dump_path, exact, damping, workers));
  std::cout << "rank,id,score\n";
  const size_t n = top == 0 ? scores.ranking.size() : std::min(top, scores.ranking.size());
  for (size_t i = 0; i < n; ++i) {
    const std::string& id = scores.ranking[i];
    std::cout << fmt::sprintf("%d,%s,%.17g\n", i + 1, id, scores.ScoreOf(id));
  }
  return absl::OkStatus();
}

int Main(int argc, char** argv) {
  CLI::App app{"Summarizer robustness and poisoning toolkit"};
  app.require_subcommand(1);

  auto* attack = app.add_subcommand("attack", "Perturbation campaigns");
  attack->require_subcommand(1);
  std::string config_path;
  auto* attack_run = attack->add_subcommand("run", "Run a campaign from a JSON config");
  attack_run->add_option("--config", config_path, "Campaign config file")->required();
  std::string run_dir;
  std::string format = "table";
  auto* attack_report = attack->add_subcommand("report", "Render a finished run");
  attack_report->add_option("run_dir", run_dir, "Run directory")->required();
  attack_report->add_option("--format", format, "csv or table");

  auto* poison = app.add_subcommand("poison", "Dirty-label poisoning");
  poison->require_subcommand(1);
  PoisonPlanArgs plan;
  auto* poison_plan = poison->add_subcommand("plan", "Select and rewrite influential rows");
  poison_plan->add_option("--dump", plan.dump, "Gradient dump")->required();
  poison_plan->add_option("--rate", plan.rate, "Poison rate")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  poison_plan->add_option("--kind", plan.kind, "contrastive or toxic")->required();
  poison_plan->add_option("--corpus", plan.corpus, "Training corpus to rewrite");
  poison_plan->add_option("--out", plan.out, "Output path prefix");
  poison_plan->add_option("--seed", plan.seed, "Transform seed");
  poison_plan->add_flag("--exact", plan.exact, "Use the exact inverse-Hessian scorer");
  poison_plan->add_option("--min-severe-toxicity", plan.min_severe_toxicity,
                          "Gate toxic rewrites on the fallback scorer");
  poison_plan->add_option("--toxic-templates", plan.toxic_templates,
                          "Template file for toxic rewrites, one per line");
  std::string summaries_path;
  std::string corpus_path;
  std::optional<double> eval_rate;
  bool eval_toxicity = false;
  std::string eval_out;
  auto* poison_eval = poison->add_subcommand("eval", "Score generated summaries");
  poison_eval->add_option("--summaries", summaries_path, "Summaries JSONL")->required();
  poison_eval->add_option("--corpus", corpus_path, "Original corpus JSONL")->required();
  poison_eval->add_option("--rate", eval_rate, "Poison rate label for the CSV row");
  poison_eval->add_flag("--toxicity", eval_toxicity, "Add fallback toxicity scores");
  poison_eval->add_option("--out", eval_out, "CSV output file");

  auto* influence = app.add_subcommand("influence", "Training-data influence");
  influence->require_subcommand(1);
  std::string dump_path;
  bool exact = false;
  double damping = 0.1;
  int workers = 1;
  size_t top = 0;
  auto* influence_score = influence->add_subcommand("score", "Score train rows");
  influence_score->add_option("--dump", dump_path, "Gradient dump")->required();
  influence_score->add_flag("--exact", exact, "Use the exact inverse-Hessian scorer");
  influence_score->add_option("--damping", damping, "Damping scale");
  influence_score->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  influence_score->add_option("--top", top, "Print only the top rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  absl::Status status;
  if (attack_run->parsed()) {
    absl::StatusOr<CampaignConfig> config = LoadCampaignConfig(config_path);
    if (!config.ok()) {
      std::cerr << "error: " << config.status() << "\n";
      return config.status().code() == absl::StatusCode::kInvalidArgument ? kExitUsage
                                                                          : kExitRuntime;
    }
    status = AttackRun(*config);
  } else if (attack_report->parsed()) {
    status = AttackReport(run_dir, format);
  } else if (poison_plan->parsed()) {
    status = PoisonPlanCommand(plan);
  } else if (poison_eval->parsed()) {
    status = PoisonEvalCommand(summaries_path, corpus_path, eval_rate, eval_toxicity, eval_out);
  } else if (influence_score->parsed()) {
    status = InfluenceScore(dump_path, exact, damping, workers, top);
  }
  if (!status.ok()) {
    std::cerr << "error: " << status << "\n";
    return status.code() == absl::StatusCode::kInvalidArgument && attack_report->parsed()
               ? kExitUsage
               : kExitRuntime;
  }
  return kExitOk;
}

}  // namespace
}  // namespace sumrobust

int main(int argc, char** argv) { return sumrobust::Main(argc, argv); }
