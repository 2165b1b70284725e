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

#include "sumrobust/sentiment.h"

#include "fmt/format.h"
#include "sumrobust/builtin_data.h"
#include "sumrobust/status_macros.h"
#include "sumrobust/util.h"

namespace sumrobust {

absl::StatusOr<SentimentLexicon> SentimentLexicon::Parse(std::string_view tsv) {
  SentimentLexicon lexicon;
  size_t line_number = 0;
  for (std::string_view line : Split(tsv, '\n')) {
    ++line_number;
    line = StripWhitespace(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string_view> fields = Split(line, '\t');
    std::optional<double> polarity;
    if (fields.size() == 2) polarity = ParseDouble(fields[1]);
    if (!polarity.has_value()) {
      return absl::InvalidArgumentError(
          fmt::format("lexicon line {}: expected term<TAB>polarity", line_number));
    }
    lexicon.Set(std::string(fields[0]), *polarity);
  }
  return lexicon;
}

absl::StatusOr<SentimentLexicon> SentimentLexicon::FromFile(const std::string& path) {
  ASSIGN_OR_RETURN(std::string contents, ReadFile(path));
  return Parse(contents);
}

const SentimentLexicon& SentimentLexicon::Builtin() {
  static const SentimentLexicon* lexicon = [] {
    auto parsed = Parse(builtin::kSentimentLexicon);
    return new SentimentLexicon(parsed.ok() ? *std::move(parsed) : SentimentLexicon());
  }();
  return *lexicon;
}

void SentimentLexicon::Set(std::string term, double polarity) {
  polarity_[NormalizeTerm(term)] = polarity;
}

std::optional<double> SentimentLexicon::Polarity(std::string_view term) const {
  const auto it = polarity_.find(term);
  if (it == polarity_.end()) return std::nullopt;
  return it->second;
}

std::string_view SentimentName(Sentiment s) {
  switch (s) {
    case Sentiment::kPositive:
      return "positive";
    case Sentiment::kNegative:
      return "negative";
    case Sentiment::kNeutral:
      return "neutral";
  }
  return "neutral";
}

bool IsNegator(const std::vector<Token>& tokens, size_t i, std::string_view text) {
  const std::string& t = tokens[i].text;
  if (t == "not" || t == "no" || t == "never" || t == "cannot") return true;
  // "n't": the token "t" right after an apostrophe that follows a word ending in n.
  if (t == "t" && i > 0 && tokens[i - 1].text.ends_with('n')) {
    const std::string_view gap =
        text.substr(tokens[i - 1].end, tokens[i].begin - tokens[i - 1].end);
    return gap == "'" || gap == "\xE2\x80\x99";
  }
  return false;
}

SentimentLabel ClassifySentiment(std::string_view sentence, const SentimentLexicon& lexicon) {
  const std::vector<Token> tokens = Tokenize(sentence);
  SentimentLabel out;
  int negated_until = -1;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (IsNegator(tokens, i, sentence)) {
      negated_until = static_cast<int>(i) + kNegationWindow;
      continue;
    }
    const std::optional<double> p = lexicon.Polarity(tokens[i].text);
    if (!p.has_value()) continue;
    out.score += static_cast<int>(i) <= negated_until ? -*p : *p;
  }
  out.label = out.score > 0   ? Sentiment::kPositive
              : out.score < 0 ? Sentiment::kNegative
                              : Sentiment::kNeutral;
  return out;
}

SentimentInversionReport SentimentInversionRate(std::string_view summary,
                                                const DocumentCluster& cluster,
                                                const TfidfModel& model,
                                                const SentimentLexicon& lexicon,
                                                double match_threshold) {
  std::vector<const std::string*> sources;
  std::vector<SparseVector> source_vectors;
  for (const Document& d : cluster.documents) {
    for (const std::string& s : d.sentences) {
      sources.push_back(&s);
      source_vectors.push_back(model.Vectorize(s));
    }
  }
  SentimentInversionReport report;
  for (const std::string& sentence : SegmentSentences(summary)) {
    ++report.summary_sentences;
    const SparseVector v = model.Vectorize(sentence);
    double best = -1.0;
    size_t best_index = 0;
    for (size_t j = 0; j < sources.size(); ++j) {
      const double sim = SparseCosine(v, source_vectors[j]);
      if (sim > best) {
        best = sim;
        best_index = j;
      }
    }
    if (sources.empty() || best < match_threshold) continue;
    ++report.matched;
    const Sentiment a = ClassifySentiment(sentence, lexicon).label;
    const Sentiment b = ClassifySentiment(*sources[best_index], lexicon).label;
    if (a == Sentiment::kNeutral || b == Sentiment::kNeutral) continue;
    ++report.polar_pairs;
    if (a != b) ++report.inverted_pairs;
  }
  if (report.polar_pairs > 0) {
    report.rate =
        static_cast<double>(report.inverted_pairs) / static_cast<double>(report.polar_pairs);
    report.inverted = *report.rate >= kInversionFlagRate;
  }
  return report;
}

}  // namespace sumrobust
