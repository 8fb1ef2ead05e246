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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satz/descriptor.hpp"
#include "satz/lexicon.hpp"
#include "satz/network.hpp"
#include "satz/token.hpp"

namespace satz {

enum class Decision { NotBoundary, Boundary, Ambiguous };

// Dual sensitivity thresholds: scores below t0 are not boundaries, scores
// at or above t1 are boundaries, anything in between stays unlabeled.
struct Thresholds {
  double t0 = 0.5;
  double t1 = 0.5;

  Thresholds() = default;
  Thresholds(double t0, double t1);  // requires 0 <= t0 <= t1 <= 1
};

Decision classify(double score, const Thresholds& thresholds);

// What makes the capital-after-boundary flag fire for a token: the previous
// token being a possible sentence boundary, or any punctuation at all.
enum class CapFlagMode { AfterCandidate, AfterPunct };

// Everything needed to turn tokens into network inputs.
struct DescriptorContext {
  const Lexicon* lexicon = nullptr;
  const CategoryMapping* mapping = nullptr;
  HeuristicParams params;
  CapFlagMode flag_mode = CapFlagMode::AfterCandidate;
};

// The context_size tokens surrounding (and excluding) the candidate:
// half before, half after; nullopt where the stream runs out.
std::vector<std::optional<Token>> context_window(
    const std::vector<Token>& tokens, std::size_t site_index,
    std::size_t context_size);

// Concatenated descriptors of the context window, ready for the network.
std::vector<double> assemble_input(const std::vector<Token>& tokens,
                                   std::size_t site_index,
                                   std::size_t context_size,
                                   const DescriptorContext& context,
                                   UnmappedTagLog* log = nullptr);

// A candidate site and its gold label (1 = sentence boundary).
struct LabeledCase {
  CandidateSite site;
  int label = 0;

  bool operator==(const LabeledCase&) const = default;
};

struct ExtractionResult {
  std::vector<Token> tokens;        // boundary sentinels removed
  std::vector<LabeledCase> cases;   // sites index into `tokens`
  std::vector<std::string> warnings;
};

// Reads a marked-up corpus: tokens followed by the sentinel are boundaries,
// all other candidates are negatives. Sentinels after a non-candidate token
// are dropped with a warning.
ExtractionResult extract_labels(std::string_view text,
                                const TokenizerOptions& options);

std::vector<TrainingExample> make_training_set(
    const ExtractionResult& extraction, std::size_t context_size,
    const DescriptorContext& context, UnmappedTagLog* log = nullptr);

// A labeled case together with its surrounding window, for inspection.
struct CaseWithContext {
  CandidateSite site;
  std::vector<std::optional<Token>> context_tokens;  // k/2 each side
  int label = 0;
};

std::vector<CaseWithContext> extract_cases(std::string_view annotated_text,
                                           const TokenizerOptions& options,
                                           std::size_t context_size);

struct SiteDecision {
  CandidateSite site;       // index into the sentinel-free token stream
  double score = 0.0;
  Decision decision = Decision::NotBoundary;
};

struct LabelOptions {
  std::string sentinel = "</s>";
  std::string ambiguous_marker = "<A>";
};

struct LabelResult {
  std::string text;  // input with markers inserted after decided tokens
  std::vector<SiteDecision> decisions;
};

// Runs the network over every candidate in `text` and re-emits the text
// with " <sentinel>" after each boundary and " <marker>" after each
// unlabeled candidate. Sentinels already present in the input are ignored
// for classification and preserved in the output.
LabelResult label_text(std::string_view text, const Network& net,
                       const Thresholds& thresholds,
                       const DescriptorContext& context,
                       const LabelOptions& options = {});

// Scores every candidate without thresholding; used by evaluation.
std::vector<SiteDecision> score_cases(const std::vector<Token>& tokens,
                                      const std::vector<LabeledCase>& cases,
                                      const Network& net,
                                      const Thresholds& thresholds,
                                      const DescriptorContext& context);

// Removes every " <marker>" (and any bare marker remnant) from the text.
std::string strip_markers(std::string_view text, std::string_view marker);

}  // namespace satz
