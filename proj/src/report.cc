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

#include "sumrobust/report.h"

#include <charconv>
#include <functional>
#include <optional>

#include "fmt/format.h"
#include "fmt/printf.h"
#include "sumrobust/status_macros.h"
#include "sumrobust/util.h"

namespace sumrobust {
namespace {

constexpr std::string_view kCsvHeader =
    "backend_id,seed,attack,n,failures,inclusion_before,inclusion_after,"
    "rouge1_before,rouge1_after,rouge1_delta,rouge2_before,rouge2_after,rouge2_delta,"
    "rougeL_before,rougeL_after,rougeL_delta";
constexpr size_t kCsvColumns = 16;

std::string Num(double v) { return fmt::sprintf("%.17g", v); }

// Quotes a CSV field when it contains a separator, quote, or newline.
std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

absl::StatusOr<std::vector<std::string>> SplitCsvLine(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        current += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (quoted) return absl::InvalidArgumentError("unterminated quoted CSV field");
  fields.push_back(std::move(current));
  return fields;
}

absl::StatusOr<double> ParseNumber(std::string_view s) {
  std::optional<double> v = ParseDouble(s);
  if (!v.has_value()) return absl::InvalidArgumentError(fmt::format("bad number {}", s));
  return *v;
}

absl::StatusOr<uint64_t> ParseU64(std::string_view s) {
  uint64_t v = 0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    return absl::InvalidArgumentError(fmt::format("bad integer {}", s));
  }
  return v;
}

std::string Table(std::string_view title, const CampaignReport& report, int precision,
                  const std::function<double(const AttackRow&)>& before,
                  const std::function<double(const AttackRow&)>& after) {
  std::vector<std::string> header = {"Backend", "Before"};
  for (PerturbationKind k : kAllPerturbationKinds) header.emplace_back(PerturbationKindName(k));
  std::vector<std::string> row = {
      report.backend_id,
      report.rows.empty() ? "-" : fmt::sprintf("%.*f", precision, before(report.rows[0]))};
  for (PerturbationKind k : kAllPerturbationKinds) {
    std::string cell = "-";
    for (const AttackRow& r : report.rows) {
      if (r.attack != k) continue;
      cell = r.n == 0 ? "n/a" : fmt::sprintf("%.*f", precision, after(r));
    }
    row.push_back(std::move(cell));
  }
  std::vector<size_t> width(header.size());
  for (size_t i = 0; i < header.size(); ++i) width[i] = std::max(header[i].size(), row[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += "  ";
      out += i == 0 ? fmt::sprintf("%-*s", width[i], cells[i])
                    : fmt::sprintf("%*s", width[i], cells[i]);
    }
    return out + "\n";
  };
  return fmt::format("{}\n{}{}", title, line(header), line(row));
}

}  // namespace

absl::StatusOr<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "table") return ReportFormat::kTable;
  if (name == "csv") return ReportFormat::kCsv;
  return absl::InvalidArgumentError(fmt::format("unknown report format: {}", name));
}

std::string RenderCsv(const CampaignReport& report) {
  std::string out = fmt::format("{}\n", kCsvHeader);
  for (const AttackRow& r : report.rows) {
    const std::vector<std::string> fields = {CsvField(report.backend_id),
                                             fmt::format("{}", report.seed),
                                             std::string(PerturbationKindName(r.attack)),
                                             fmt::format("{}", r.n),
                                             fmt::format("{}", r.failures),
                                             Num(r.inclusion_before),
                                             Num(r.inclusion_after),
                                             Num(r.rouge_before.rouge1),
                                             Num(r.rouge_after.rouge1),
                                             Num(r.rouge_delta.rouge1),
                                             Num(r.rouge_before.rouge2),
                                             Num(r.rouge_after.rouge2),
                                             Num(r.rouge_delta.rouge2),
                                             Num(r.rouge_before.rougeL),
                                             Num(r.rouge_after.rougeL),
                                             Num(r.rouge_delta.rougeL)};
    fmt::format_to(std::back_inserter(out), "{}\n", fmt::join(fields, ","));
  }
  return out;
}

absl::StatusOr<CampaignReport> ParseCsv(std::string_view csv) {
  std::vector<std::string_view> lines = Split(csv, '\n');
  if (lines.empty() || StripTrailingWhitespace(lines[0]) != kCsvHeader) {
    return absl::InvalidArgumentError("report CSV header does not match");
  }
  CampaignReport report;
  for (size_t i = 1; i < lines.size(); ++i) {
    if (StripWhitespace(lines[i]).empty()) continue;
    ASSIGN_OR_RETURN(std::vector<std::string> f, SplitCsvLine(StripTrailingWhitespace(lines[i])));
    if (f.size() != kCsvColumns) {
      return absl::InvalidArgumentError(fmt::format("report CSV line {} has {} fields, expected {}",
                                                    i + 1, f.size(), kCsvColumns));
    }
    ASSIGN_OR_RETURN(uint64_t seed, ParseU64(f[1]));
    if (i == 1) {
      report.backend_id = f[0];
      report.seed = seed;
    } else if (report.backend_id != f[0] || report.seed != seed) {
      return absl::InvalidArgumentError("report CSV mixes runs");
    }
    AttackRow r;
    ASSIGN_OR_RETURN(r.attack, ParsePerturbationKind(f[2]));
    ASSIGN_OR_RETURN(r.n, ParseU64(f[3]));
    ASSIGN_OR_RETURN(r.failures, ParseU64(f[4]));
    ASSIGN_OR_RETURN(r.inclusion_before, ParseNumber(f[5]));
    ASSIGN_OR_RETURN(r.inclusion_after, ParseNumber(f[6]));
    ASSIGN_OR_RETURN(r.rouge_before.rouge1, ParseNumber(f[7]));
    ASSIGN_OR_RETURN(r.rouge_after.rouge1, ParseNumber(f[8]));
    ASSIGN_OR_RETURN(r.rouge_delta.rouge1, ParseNumber(f[9]));
    ASSIGN_OR_RETURN(r.rouge_before.rouge2, ParseNumber(f[10]));
    ASSIGN_OR_RETURN(r.rouge_after.rouge2, ParseNumber(f[11]));
    ASSIGN_OR_RETURN(r.rouge_delta.rouge2, ParseNumber(f[12]));
    ASSIGN_OR_RETURN(r.rouge_before.rougeL, ParseNumber(f[13]));
    ASSIGN_OR_RETURN(r.rouge_after.rougeL, ParseNumber(f[14]));
    ASSIGN_OR_RETURN(r.rouge_delta.rougeL, ParseNumber(f[15]));
    report.rows.push_back(r);
  }
  return report;
}

std::string RenderTable(const CampaignReport& report) {
  return fmt::format(
      "{}\n{}\n{}\n{}",
      Table(
          "Lead-sentence inclusion (%)", report, 2,
          [](const AttackRow& r) { return r.inclusion_before; },
          [](const AttackRow& r) { return r.inclusion_after; }),
      Table(
          "ROUGE-1 F1", report, 3, [](const AttackRow& r) { return r.rouge_before.rouge1; },
          [](const AttackRow& r) { return r.rouge_after.rouge1; }),
      Table(
          "ROUGE-2 F1", report, 3, [](const AttackRow& r) { return r.rouge_before.rouge2; },
          [](const AttackRow& r) { return r.rouge_after.rouge2; }),
      Table(
          "ROUGE-L F1", report, 3, [](const AttackRow& r) { return r.rouge_before.rougeL; },
          [](const AttackRow& r) { return r.rouge_after.rougeL; }));
}

std::string RenderReport(const CampaignReport& report, ReportFormat format) {
  return format == ReportFormat::kCsv ? RenderCsv(report) : RenderTable(report);
}

}  // namespace sumrobust
