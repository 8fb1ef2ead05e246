// Copyright 2026 The Satz Toolkit Authors
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

#include "satz/evaluation.hpp"

#include "satz/error.hpp"
#include "satz/text.hpp"

namespace satz {

EvalReport evaluate(const std::vector<double>& scores,
                    const std::vector<int>& labels,
                    const Thresholds& thresholds) {
  if (scores.size() != labels.size())
    throw ArgumentError("got " + std::to_string(scores.size()) +
                        " scores for " + std::to_string(labels.size()) +
                        " labels");

  EvalReport report;
  report.total_cases = scores.size();
  std::size_t boundaries = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (labels[i] != 0 && labels[i] != 1)
      throw ArgumentError("labels must be 0 or 1");
    const bool gold = labels[i] == 1;
    if (gold) ++boundaries;
    switch (classify(scores[i], thresholds)) {
      case Decision::Boundary:
        gold ? ++report.true_pos : ++report.false_pos;
        break;
      case Decision::NotBoundary:
        gold ? ++report.false_neg : ++report.true_neg;
        break;
      case Decision::Ambiguous:
        ++report.not_labeled;
        if ((scores[i] >= 0.5) == gold) ++report.were_correct;
        break;
    }
  }
  if (report.total_cases == 0) return report;
  const auto total = static_cast<double>(report.total_cases);
  report.lower_bound = static_cast<double>(boundaries) / total;
  report.accuracy =
      static_cast<double>(report.true_pos + report.true_neg) / total;
  report.error_rate =
      static_cast<double>(report.false_pos + report.false_neg) / total;
  return report;
}

std::vector<SweepRow> sweep_thresholds(
    const std::vector<double>& scores, const std::vector<int>& labels,
    const std::vector<std::pair<double, double>>& pairs) {
  std::vector<SweepRow> rows;
  rows.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [t0, t1] = pairs[i];
    try {
      SweepRow row{Thresholds(t0, t1), EvalReport{}};
      row.report = evaluate(scores, labels, row.thresholds);
      rows.push_back(std::move(row));
    } catch (const ArgumentError& e) {
      throw ArgumentError("threshold pair #" + std::to_string(i + 1) + ": " +
                          e.what());
    }
  }
  return rows;
}

CorpusStats corpus_stats(const ExtractionResult& extraction) {
  CorpusStats stats;
  stats.tokens = extraction.tokens.size();
  stats.candidates = extraction.cases.size();
  for (const LabeledCase& labeled : extraction.cases)
    if (labeled.label) ++stats.boundaries;
  stats.warnings = extraction.warnings.size();
  if (stats.candidates > 0)
    stats.lower_bound = static_cast<double>(stats.boundaries) /
                        static_cast<double>(stats.candidates);
  return stats;
}

CorpusStats corpus_stats(std::string_view annotated_text,
                         const TokenizerOptions& options) {
  return corpus_stats(extract_labels(annotated_text, options));
}

std::string case_fold(std::string_view text, CaseMode mode) {
  return mode == CaseMode::Lower ? text::lower_copy(text)
                                 : text::upper_copy(text);
}

namespace {

bool is_quote_token(const Token& token) {
  if (token.kind != TokenKind::Punct || token.text.empty()) return false;
  std::size_t pos = 0;
  const char32_t first = text::decode(token.text, pos);
  return first == U'"' || first == U'\'' || first == U'`';
}

bool is_ellipsis_token(const Token& token) {
  if (token.kind != TokenKind::Punct || token.text.size() < 2) return false;
  for (char c : token.text)
    if (c != '.') return false;
  return true;
}

}  // namespace

ErrorClass classify_error_site(const std::vector<Token>& tokens,
                               const CandidateSite& site) {
  if (site.index >= tokens.size())
    throw ArgumentError("candidate index out of range");
  const Token& token = tokens[site.index];
  if (token.kind == TokenKind::Word) return ErrorClass::Abbreviation;
  if (is_ellipsis_token(token)) return ErrorClass::Ellipsis;
  if (site.index > 0 && is_quote_token(tokens[site.index - 1]))
    return ErrorClass::QuoteAdjacent;
  if (site.index + 1 < tokens.size() && is_quote_token(tokens[site.index + 1]))
    return ErrorClass::QuoteAdjacent;
  return ErrorClass::Other;
}

const char* error_class_name(ErrorClass error_class) {
  switch (error_class) {
    case ErrorClass::Abbreviation:
      return "abbreviation";
    case ErrorClass::Ellipsis:
      return "ellipsis";
    case ErrorClass::QuoteAdjacent:
      return "quote-adjacent";
    case ErrorClass::Other:
      return "other";
  }
  return "other";
}

FileComparison compare_labeled(const ExtractionResult& gold,
                               const ExtractionResult& hypothesis) {
  FileComparison comparison;
  const auto& g = gold.tokens;
  const auto& h = hypothesis.tokens;
  const std::size_t shared = std::min(g.size(), h.size());
  for (std::size_t i = 0; i < shared; ++i) {
    if (g[i].text == h[i].text && g[i].kind == h[i].kind) continue;
    comparison.divergence = "token " + std::to_string(i + 1) + ": reference '" +
                            g[i].text + "' vs hypothesis '" + h[i].text + "'";
    return comparison;
  }
  if (g.size() != h.size()) {
    comparison.divergence =
        "reference has " + std::to_string(g.size()) + " tokens, hypothesis " +
        std::to_string(h.size());
    return comparison;
  }

  comparison.tokens_match = true;
  // Same token stream means identical candidate sites; compare labels.
  std::vector<double> scores;
  std::vector<int> labels;
  scores.reserve(hypothesis.cases.size());
  labels.reserve(gold.cases.size());
  for (const LabeledCase& labeled : hypothesis.cases)
    scores.push_back(labeled.label ? 1.0 : 0.0);
  for (const LabeledCase& labeled : gold.cases)
    labels.push_back(labeled.label);
  comparison.report = evaluate(scores, labels, Thresholds(0.5, 0.5));
  return comparison;
}

}  // namespace satz
