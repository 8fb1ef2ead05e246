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

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "satz/segmenter.hpp"

namespace satz {

struct EvalReport {
  std::size_t total_cases = 0;
  std::size_t true_pos = 0;    // boundary, labeled boundary
  std::size_t true_neg = 0;    // non-boundary, labeled non-boundary
  std::size_t false_pos = 0;
  std::size_t false_neg = 0;
  std::size_t not_labeled = 0;   // left between the thresholds
  std::size_t were_correct = 0;  // unlabeled cases the raw score had right
  double lower_bound = 0.0;      // accuracy of always answering "boundary"
  double accuracy = 0.0;         // (tp + tn) / total
  double error_rate = 0.0;       // (fp + fn) / total
};

// Scores and gold labels (0/1), case by case, under one threshold pair.
EvalReport evaluate(const std::vector<double>& scores,
                    const std::vector<int>& labels,
                    const Thresholds& thresholds);

struct SweepRow {
  Thresholds thresholds;
  EvalReport report;
};

// Re-thresholds the same scores for each pair; scores are computed once.
std::vector<SweepRow> sweep_thresholds(
    const std::vector<double>& scores, const std::vector<int>& labels,
    const std::vector<std::pair<double, double>>& pairs);

struct CorpusStats {
  std::size_t tokens = 0;      // sentinel-free token count
  std::size_t candidates = 0;  // possible boundary sites
  std::size_t boundaries = 0;  // sites marked as true boundaries
  std::size_t warnings = 0;
  double lower_bound = 0.0;
};

CorpusStats corpus_stats(const ExtractionResult& extraction);
CorpusStats corpus_stats(std::string_view annotated_text,
                         const TokenizerOptions& options);

// Letter-by-letter case conversion; every other byte is untouched.
enum class CaseMode { Lower, Upper };
std::string case_fold(std::string_view text, CaseMode mode);

// Rough diagnosis of what made a candidate hard.
enum class ErrorClass { Abbreviation, Ellipsis, QuoteAdjacent, Other };

ErrorClass classify_error_site(const std::vector<Token>& tokens,
                               const CandidateSite& site);
const char* error_class_name(ErrorClass error_class);

// Result of checking one labeled text against a reference labeling.
struct FileComparison {
  bool tokens_match = false;
  std::string divergence;  // first token mismatch, when tokens_match is false
  EvalReport report;       // filled only when the token streams match
};

FileComparison compare_labeled(const ExtractionResult& gold,
                               const ExtractionResult& hypothesis);

}  // namespace satz
