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

#include "sumrobust/perturb.h"

#include <algorithm>

#include "fmt/format.h"
#include "sumrobust/rng.h"
#include "sumrobust/status_macros.h"
#include "sumrobust/string_containers.h"
#include "sumrobust/utf8.h"

namespace sumrobust {
namespace {

constexpr std::string_view kKindNames[] = {"CI",  "CD", "CR",  "CS",  "WD", "WRS",
                                           "WRH", "SR", "SRH", "SRP", "DR"};

bool IsAsciiSpace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool IsAsciiPunct(char c) {
  return c == ',' || c == '.' || c == ';' || c == ':' || c == '!' || c == '?' || c == ')' ||
         c == '\'' || c == '"';
}

// Replaces text[begin, end). An empty replacement deletes the span and
// collapses the whitespace left behind.
std::string ReplaceSpan(std::string_view text, size_t begin, size_t end,
                        std::string_view replacement) {
  std::string_view prefix = text.substr(0, begin);
  std::string_view suffix = text.substr(end);
  if (replacement.empty()) {
    const bool prefix_space = prefix.empty() || IsAsciiSpace(prefix.back());
    if (prefix_space) {
      while (!suffix.empty() && IsAsciiSpace(suffix.front())) suffix.remove_prefix(1);
    }
    if (!suffix.empty() && IsAsciiPunct(suffix.front())) {
      while (!prefix.empty() && IsAsciiSpace(prefix.back())) prefix.remove_suffix(1);
    }
  }
  return fmt::format("{}{}{}", prefix, replacement, suffix);
}

bool SharesToken(std::string_view a, std::string_view b) {
  const std::vector<std::string> ta = TokenStrings(a);
  const StringSet sa(ta.begin(), ta.end());
  for (const std::string& t : TokenStrings(b)) {
    if (sa.contains(t)) return true;
  }
  return false;
}

absl::StatusOr<std::string> WordReplacement(std::string_view original, WordEdit edit,
                                            const Providers& providers) {
  switch (edit) {
    case WordEdit::kDelete:
      return std::string();
    case WordEdit::kSynonym: {
      ASSIGN_OR_RETURN(std::vector<std::string> candidates,
                       providers.synonym_provider().Synonyms(original));
      const std::string norm = NormalizeTerm(original);
      for (const std::string& c : candidates) {
        if (!c.empty() && NormalizeTerm(c) != norm) return MatchCapitalization(original, c);
      }
      return absl::NotFoundError(fmt::format("no synonym for {}", original));
    }
    case WordEdit::kHomoglyph: {
      std::string mapped = providers.homoglyph_table().MapWord(original);
      if (mapped == original || SharesToken(mapped, original)) {
        return absl::FailedPreconditionError(fmt::format("no homoglyph for {}", original));
      }
      return mapped;
    }
  }
  return absl::InternalError("unknown word edit");
}

PerturbationKind KindForWordEdit(WordEdit edit) {
  switch (edit) {
    case WordEdit::kDelete:
      return PerturbationKind::kWD;
    case WordEdit::kSynonym:
      return PerturbationKind::kWRS;
    case WordEdit::kHomoglyph:
      return PerturbationKind::kWRH;
  }
  return PerturbationKind::kWD;
}

std::string HomoglyphSentence(std::string_view sentence, const HomoglyphTable& table) {
  std::string out(sentence);
  const std::vector<Token> tokens = Tokenize(sentence);
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    const std::string_view word = sentence.substr(it->begin, it->end - it->begin);
    out.replace(it->begin, it->end - it->begin, table.MapWord(word));
  }
  return out;
}

absl::Status CheckLeadable(const DocumentCluster& cluster, int m) {
  if (m < 1) return absl::InvalidArgumentError("lead size m must be at least 1");
  if (cluster.documents.empty() || cluster.documents[0].sentences.empty()) {
    return absl::FailedPreconditionError(
        fmt::format("cluster {} has an empty first document", cluster.id));
  }
  return absl::OkStatus();
}

struct PlannedEdit {
  size_t rank = 0;
  int sentence = 0;
  int word = 0;
  size_t begin = 0;
  size_t end = 0;
  std::string original;
  std::string replacement;
};

absl::StatusOr<PerturbedCluster> WordOrCharAttack(const DocumentCluster& cluster,
                                                  PerturbationKind kind, const AttackConfig& config,
                                                  uint64_t seed) {
  ASSIGN_OR_RETURN(LeadTarget lead, ExtractLead(cluster, config.m));
  if (config.words_per_sentence < 1) {
    return absl::InvalidArgumentError("words_per_sentence must be at least 1");
  }

  std::optional<TfidfModel> own_model;
  const TfidfModel* model = config.model;
  if (model == nullptr) {
    std::vector<std::string> docs;
    for (const Document& d : cluster.documents) docs.push_back(d.raw_text);
    ASSIGN_OR_RETURN(own_model, TfidfModel::Fit(docs));
    model = &*own_model;
  }
  const int k = config.words_per_sentence * static_cast<int>(lead.sentences.size());
  ASSIGN_OR_RETURN(ImportantWords important,
                   SelectImportantWords(lead, cluster.reference_summary, *model, k));
  if (important.words.empty()) {
    return absl::FailedPreconditionError(fmt::format("no targets in cluster {}", cluster.id));
  }

  std::vector<std::vector<Token>> tokens;
  for (const std::string& s : lead.sentences) tokens.push_back(Tokenize(s));
  std::vector<int> deletions(lead.sentences.size(), 0);

  std::vector<PlannedEdit> edits;
  for (size_t rank = 0; rank < important.words.size(); ++rank) {
    const std::string& term = important.words[rank].first;
    std::optional<PlannedEdit> edit;
    for (size_t s = 0; s < tokens.size() && !edit; ++s) {
      for (size_t t = 0; t < tokens[s].size(); ++t) {
        if (tokens[s][t].text != term) continue;
        const Token& tok = tokens[s][t];
        edit = PlannedEdit{.rank = rank,
                           .sentence = static_cast<int>(s),
                           .word = static_cast<int>(t),
                           .begin = tok.begin,
                           .end = tok.end,
                           .original = lead.sentences[s].substr(tok.begin, tok.end - tok.begin)};
        break;
      }
    }
    if (!edit) continue;

    const uint64_t word_seed = DeriveSeed(seed, rank);
    const HomoglyphTable& table = config.providers.homoglyph_table();
    absl::StatusOr<std::string> replacement;
    switch (kind) {
      case PerturbationKind::kCI:
        replacement =
            CharPerturb(edit->original, CharEdit::kInsert, std::nullopt, word_seed, table);
        break;
      case PerturbationKind::kCD:
        replacement =
            CharPerturb(edit->original, CharEdit::kDelete, std::nullopt, word_seed, table);
        break;
      case PerturbationKind::kCR:
        replacement =
            CharPerturb(edit->original, CharEdit::kHomoglyph, std::nullopt, word_seed, table);
        break;
      case PerturbationKind::kCS:
        replacement = CharPerturb(edit->original, CharEdit::kSwap, std::nullopt, word_seed, table);
        break;
      case PerturbationKind::kWD:
        // Never delete the last remaining token of a sentence.
        if (deletions[edit->sentence] + 1 >= static_cast<int>(tokens[edit->sentence].size())) {
          continue;
        }
        replacement = WordReplacement(edit->original, WordEdit::kDelete, config.providers);
        break;
      case PerturbationKind::kWRS:
        replacement = WordReplacement(edit->original, WordEdit::kSynonym, config.providers);
        break;
      case PerturbationKind::kWRH:
        replacement = WordReplacement(edit->original, WordEdit::kHomoglyph, config.providers);
        break;
      default:
        return absl::InternalError("not a word or character attack");
    }
    if (!replacement.ok()) continue;
    if (kind == PerturbationKind::kWD) ++deletions[edit->sentence];
    edit->replacement = *std::move(replacement);
    edits.push_back(*std::move(edit));
    if (config.single_word) break;
  }
  if (edits.empty()) {
    return absl::FailedPreconditionError(
        fmt::format("no targets in cluster {} accept {}", cluster.id, PerturbationKindName(kind)));
  }

  std::vector<std::string> sentences = cluster.documents[0].sentences;
  std::vector<const PlannedEdit*> order;
  for (const PlannedEdit& e : edits) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](const PlannedEdit* a, const PlannedEdit* b) {
    return a->sentence != b->sentence ? a->sentence < b->sentence : a->begin > b->begin;
  });
  for (const PlannedEdit* e : order) {
    sentences[e->sentence] = ReplaceSpan(sentences[e->sentence], e->begin, e->end, e->replacement);
  }

  PerturbedCluster out;
  out.cluster = cluster;
  out.cluster.documents[0] = Document::FromSentences(std::move(sentences));
  for (const PlannedEdit& e : edits) {
    out.records.push_back(
        PerturbationRecord{.kind = kind,
                           .target_word = important.words[e.rank].first,
                           .original = e.original,
                           .replacement = e.replacement,
                           .location = {.document = 0, .sentence = e.sentence, .word = e.word}});
  }
  ASSIGN_OR_RETURN(out.perturbed_lead, ExtractLead(out.cluster, config.m));
  return out;
}

}  // namespace

std::string_view PerturbationKindName(PerturbationKind kind) {
  return kKindNames[static_cast<int>(kind)];
}

absl::StatusOr<PerturbationKind> ParsePerturbationKind(std::string_view name) {
  for (PerturbationKind kind : kAllPerturbationKinds) {
    if (PerturbationKindName(kind) == name) return kind;
  }
  return absl::InvalidArgumentError(fmt::format("unknown perturbation kind: {}", name));
}

bool IsCharLevel(PerturbationKind kind) {
  return kind == PerturbationKind::kCI || kind == PerturbationKind::kCD ||
         kind == PerturbationKind::kCR || kind == PerturbationKind::kCS;
}

bool IsWordLevel(PerturbationKind kind) {
  return kind == PerturbationKind::kWD || kind == PerturbationKind::kWRS ||
         kind == PerturbationKind::kWRH;
}

const SynonymProvider& Providers::synonym_provider() const {
  return synonyms != nullptr ? *synonyms : ThesaurusSynonymProvider::Builtin();
}

const ParaphraseProvider& Providers::paraphrase_provider() const {
  return paraphrases != nullptr ? *paraphrases : MapParaphraseProvider::Builtin();
}

const HomoglyphTable& Providers::homoglyph_table() const {
  return homoglyphs != nullptr ? *homoglyphs : DefaultHomoglyphTable();
}

absl::StatusOr<std::string> CharPerturb(std::string_view word, CharEdit edit,
                                        std::optional<size_t> position, uint64_t seed,
                                        const HomoglyphTable& table) {
  std::u32string chars = DecodeUtf8(word);
  const size_t n = chars.size();
  if (n == 0) return absl::InvalidArgumentError("empty word");
  if ((edit == CharEdit::kDelete || edit == CharEdit::kSwap) && n < 2) {
    return absl::InvalidArgumentError("word too short");
  }
  CounterRng rng(seed, static_cast<uint64_t>(edit));
  // Interior positions keep the first and last characters in place.
  auto interior = [&](size_t count) -> size_t {
    return n >= 3 ? 1 + rng.Uniform(count - 2) : rng.Uniform(count);
  };
  auto check = [&](size_t p, size_t limit) -> absl::Status {
    if (p >= limit) {
      return absl::OutOfRangeError(fmt::format("position {} out of range for \"{}\"", p, word));
    }
    return absl::OkStatus();
  };

  switch (edit) {
    case CharEdit::kInsert: {
      const size_t p = position.value_or(interior(n));
      RETURN_IF_ERROR(check(p, n));
      chars.insert(chars.begin() + p, chars[p]);
      break;
    }
    case CharEdit::kDelete: {
      const size_t p = position.value_or(interior(n));
      RETURN_IF_ERROR(check(p, n));
      chars.erase(chars.begin() + p);
      break;
    }
    case CharEdit::kSwap: {
      size_t p = 0;
      if (position.has_value()) {
        p = *position;
        RETURN_IF_ERROR(check(p, n - 1));
        if (chars[p] == chars[p + 1]) {
          return absl::FailedPreconditionError(fmt::format("swap at {} is a no-op", p));
        }
      } else {
        std::vector<size_t> all;
        std::vector<size_t> inner;
        for (size_t i = 0; i + 1 < n; ++i) {
          if (chars[i] == chars[i + 1]) continue;
          all.push_back(i);
          if (i >= 1 && i + 2 < n) inner.push_back(i);
        }
        const std::vector<size_t>& pool = inner.empty() ? all : inner;
        if (pool.empty()) {
          return absl::FailedPreconditionError(
              fmt::format("no distinct adjacent pair in \"{}\"", word));
        }
        p = pool[rng.Uniform(pool.size())];
      }
      std::swap(chars[p], chars[p + 1]);
      break;
    }
    case CharEdit::kHomoglyph: {
      size_t p = n;
      if (position.has_value()) {
        p = *position;
        RETURN_IF_ERROR(check(p, n));
        if (!table.Lookup(chars[p]).has_value()) {
          return absl::FailedPreconditionError(fmt::format("position {} is not mappable", p));
        }
      } else {
        for (size_t i = 0; i < n; ++i) {
          if (table.Lookup(chars[i]).has_value()) {
            p = i;
            break;
          }
        }
        if (p == n) {
          return absl::FailedPreconditionError(
              fmt::format("no mappable character in \"{}\"", word));
        }
      }
      chars[p] = table.Map(chars[p]);
      break;
    }
  }
  return EncodeUtf8(chars);
}

absl::StatusOr<std::pair<std::string, PerturbationRecord>> WordPerturb(std::string_view sentence,
                                                                       std::string_view target,
                                                                       WordEdit edit,
                                                                       const Providers& providers) {
  const std::string norm = NormalizeTerm(target);
  const std::vector<Token> tokens = Tokenize(sentence);
  for (size_t t = 0; t < tokens.size(); ++t) {
    if (tokens[t].text != norm) continue;
    const std::string original(sentence.substr(tokens[t].begin, tokens[t].end - tokens[t].begin));
    ASSIGN_OR_RETURN(std::string replacement, WordReplacement(original, edit, providers));
    PerturbationRecord record{.kind = KindForWordEdit(edit),
                              .target_word = norm,
                              .original = original,
                              .replacement = replacement,
                              .location = {.document = 0, .word = static_cast<int>(t)}};
    return std::make_pair(ReplaceSpan(sentence, tokens[t].begin, tokens[t].end, replacement),
                          std::move(record));
  }
  return absl::NotFoundError(fmt::format("target \"{}\" not in sentence", target));
}

absl::StatusOr<PerturbedCluster> SentencePerturb(const DocumentCluster& cluster, int m,
                                                 SentenceEdit edit, const Providers& providers) {
  RETURN_IF_ERROR(CheckLeadable(cluster, m));
  const std::vector<std::string>& original = cluster.documents[0].sentences;
  const size_t lead = std::min<size_t>(m, original.size());

  PerturbedCluster out;
  out.cluster = cluster;
  std::vector<std::string> sentences = original;
  switch (edit) {
    case SentenceEdit::kReorder: {
      if (original.size() < static_cast<size_t>(m) + 1) {
        return absl::FailedPreconditionError(fmt::format(
            "sentence reorder needs at least {} sentences in the first document", m + 1));
      }
      std::rotate(sentences.begin(), sentences.begin() + m, sentences.end());
      for (int i = 0; i < m; ++i) {
        out.records.push_back(PerturbationRecord{.kind = PerturbationKind::kSR,
                                                 .original = original[i],
                                                 .replacement = original[i],
                                                 .location = {.document = 0, .sentence = i}});
      }
      out.perturbed_lead =
          LeadTarget{.cluster_id = cluster.id,
                     .m = m,
                     .sentences = std::vector<std::string>(original.begin(), original.begin() + m)};
      out.cluster.documents[0] = Document::FromSentences(std::move(sentences));
      return out;
    }
    case SentenceEdit::kHomoglyph:
    case SentenceEdit::kParaphrase: {
      for (size_t i = 0; i < lead; ++i) {
        std::string replaced;
        if (edit == SentenceEdit::kHomoglyph) {
          replaced = HomoglyphSentence(original[i], providers.homoglyph_table());
        } else {
          auto paraphrase = providers.paraphrase_provider().Paraphrase(original[i]);
          if (!paraphrase.ok()) {
            return absl::Status(paraphrase.status().code(),
                                fmt::format("paraphrase of sentence {} in cluster {}: {}", i,
                                            cluster.id, paraphrase.status().message()));
          }
          replaced = *std::move(paraphrase);
        }
        if (replaced == original[i]) continue;
        out.records.push_back(
            PerturbationRecord{.kind = edit == SentenceEdit::kHomoglyph ? PerturbationKind::kSRH
                                                                        : PerturbationKind::kSRP,
                               .original = original[i],
                               .replacement = replaced,
                               .location = {.document = 0, .sentence = static_cast<int>(i)}});
        sentences[i] = std::move(replaced);
      }
      if (out.records.empty()) {
        return absl::FailedPreconditionError(
            fmt::format("no lead sentence of cluster {} could be changed", cluster.id));
      }
      out.cluster.documents[0] = Document::FromSentences(std::move(sentences));
      ASSIGN_OR_RETURN(out.perturbed_lead, ExtractLead(out.cluster, m));
      return out;
    }
  }
  return absl::InternalError("unknown sentence edit");
}

absl::StatusOr<PerturbedCluster> DocumentReorder(const DocumentCluster& cluster, int m) {
  if (cluster.documents.size() < 2) {
    return absl::FailedPreconditionError("document reorder needs at least 2 documents");
  }
  ASSIGN_OR_RETURN(LeadTarget lead, ExtractLead(cluster, m));
  PerturbedCluster out;
  out.cluster = cluster;
  std::rotate(out.cluster.documents.begin(), out.cluster.documents.begin() + 1,
              out.cluster.documents.end());
  out.records.push_back(PerturbationRecord{.kind = PerturbationKind::kDR,
                                           .original = cluster.documents[0].raw_text,
                                           .replacement = cluster.documents[0].raw_text,
                                           .location = {.document = 0}});
  out.perturbed_lead = std::move(lead);
  return out;
}

absl::StatusOr<PerturbedCluster> ApplyAttack(const DocumentCluster& cluster, PerturbationKind kind,
                                             const AttackConfig& config, uint64_t seed) {
  RETURN_IF_ERROR(CheckLeadable(cluster, config.m));
  switch (kind) {
    case PerturbationKind::kSR:
      return SentencePerturb(cluster, config.m, SentenceEdit::kReorder, config.providers);
    case PerturbationKind::kSRH:
      return SentencePerturb(cluster, config.m, SentenceEdit::kHomoglyph, config.providers);
    case PerturbationKind::kSRP:
      return SentencePerturb(cluster, config.m, SentenceEdit::kParaphrase, config.providers);
    case PerturbationKind::kDR:
      return DocumentReorder(cluster, config.m);
    default:
      return WordOrCharAttack(cluster, kind, config, seed);
  }
}

}  // namespace sumrobust
