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

#include "satz/segmenter.hpp"

#include <algorithm>
#include <cmath>

#include "satz/error.hpp"
#include "satz/text.hpp"

namespace satz {

Thresholds::Thresholds(double t0_in, double t1_in) : t0(t0_in), t1(t1_in) {
  if (!(t0 >= 0.0 && t0 <= t1 && t1 <= 1.0))
    throw ArgumentError("thresholds must satisfy 0 <= t0 <= t1 <= 1, got t0=" +
                        std::to_string(t0_in) + " t1=" +
                        std::to_string(t1_in));
}

Decision classify(double score, const Thresholds& thresholds) {
  if (score < thresholds.t0) return Decision::NotBoundary;
  if (score >= thresholds.t1) return Decision::Boundary;
  return Decision::Ambiguous;
}

namespace {

void check_context(const DescriptorContext& context,
                   std::size_t context_size) {
  if (context.lexicon == nullptr || context.mapping == nullptr)
    throw ArgumentError("descriptor context needs a lexicon and a mapping");
  if (context_size == 0 || context_size % 2 != 0)
    throw ArgumentError("context size must be a positive even number");
}

bool prev_triggers_flag(const std::vector<Token>& tokens, std::size_t index,
                        CapFlagMode mode) {
  if (index == 0) return false;
  const Token& prev = tokens[index - 1];
  if (mode == CapFlagMode::AfterPunct && prev.kind == TokenKind::Punct)
    return true;
  return is_candidate_token(prev);
}

}  // namespace

std::vector<std::optional<Token>> context_window(
    const std::vector<Token>& tokens, std::size_t site_index,
    std::size_t context_size) {
  if (site_index >= tokens.size())
    throw ArgumentError("candidate index out of range");
  const std::size_t half = context_size / 2;
  std::vector<std::optional<Token>> window;
  window.reserve(context_size);
  for (std::size_t n = half; n >= 1; --n) {
    if (site_index >= n)
      window.emplace_back(tokens[site_index - n]);
    else
      window.emplace_back(std::nullopt);
  }
  for (std::size_t n = 1; n <= half; ++n) {
    if (site_index + n < tokens.size())
      window.emplace_back(tokens[site_index + n]);
    else
      window.emplace_back(std::nullopt);
  }
  return window;
}

std::vector<double> assemble_input(const std::vector<Token>& tokens,
                                   std::size_t site_index,
                                   std::size_t context_size,
                                   const DescriptorContext& context,
                                   UnmappedTagLog* log) {
  check_context(context, context_size);
  if (site_index >= tokens.size())
    throw ArgumentError("candidate index out of range");

  std::vector<double> input;
  input.reserve(context_size * kDescriptorSize);
  const std::size_t half = context_size / 2;
  const auto append = [&](std::size_t index, bool in_range) {
    DescriptorArray descriptor;
    if (in_range) {
      const Token& token = tokens[index];
      const TagFrequencies tags =
          context.lexicon->lookup(token, context.params);
      descriptor = build_descriptor(
          token, tags, *context.mapping,
          prev_triggers_flag(tokens, index, context.flag_mode), log);
    } else {
      descriptor = padding_descriptor();
    }
    input.insert(input.end(), descriptor.begin(), descriptor.end());
  };
  for (std::size_t n = half; n >= 1; --n)
    append(site_index - n, site_index >= n);
  for (std::size_t n = 1; n <= half; ++n)
    append(site_index + n, site_index + n < tokens.size());
  return input;
}

ExtractionResult extract_labels(std::string_view text,
                                const TokenizerOptions& options) {
  const std::vector<Token> all = tokenize(text, options);

  ExtractionResult result;
  std::vector<char> followed;  // parallel to result.tokens
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Token& token = all[i];
    if (token.kind == TokenKind::Sentinel) {
      if (i == 0 || !is_candidate_token(all[i - 1]))
        result.warnings.push_back(
            "ignored sentinel at byte " + std::to_string(token.byte_offset) +
            (i == 0 ? ": nothing precedes it"
                    : ": '" + all[i - 1].text +
                          "' is not a boundary candidate"));
      continue;
    }
    result.tokens.push_back(token);
    followed.push_back(i + 1 < all.size() &&
                       all[i + 1].kind == TokenKind::Sentinel);
  }

  for (const CandidateSite& site : find_candidates(result.tokens))
    result.cases.push_back(LabeledCase{site, followed[site.index] ? 1 : 0});
  return result;
}

std::vector<TrainingExample> make_training_set(
    const ExtractionResult& extraction, std::size_t context_size,
    const DescriptorContext& context, UnmappedTagLog* log) {
  std::vector<TrainingExample> examples;
  examples.reserve(extraction.cases.size());
  for (const LabeledCase& labeled : extraction.cases) {
    TrainingExample example;
    example.input = assemble_input(extraction.tokens, labeled.site.index,
                                   context_size, context, log);
    example.target = labeled.label ? 1.0 : 0.0;
    examples.push_back(std::move(example));
  }
  return examples;
}

std::vector<CaseWithContext> extract_cases(std::string_view annotated_text,
                                           const TokenizerOptions& options,
                                           std::size_t context_size) {
  if (context_size == 0 || context_size % 2 != 0)
    throw ArgumentError("context size must be a positive even number");
  const ExtractionResult extraction = extract_labels(annotated_text, options);
  std::vector<CaseWithContext> cases;
  cases.reserve(extraction.cases.size());
  for (const LabeledCase& labeled : extraction.cases) {
    CaseWithContext with_context;
    with_context.site = labeled.site;
    with_context.context_tokens =
        context_window(extraction.tokens, labeled.site.index, context_size);
    with_context.label = labeled.label;
    cases.push_back(std::move(with_context));
  }
  return cases;
}

std::vector<SiteDecision> score_cases(const std::vector<Token>& tokens,
                                      const std::vector<LabeledCase>& cases,
                                      const Network& net,
                                      const Thresholds& thresholds,
                                      const DescriptorContext& context) {
  std::vector<SiteDecision> decisions;
  decisions.reserve(cases.size());
  for (const LabeledCase& labeled : cases) {
    SiteDecision decision;
    decision.site = labeled.site;
    decision.score = forward(
        net, assemble_input(tokens, labeled.site.index, net.context_size,
                            context));
    decision.decision = classify(decision.score, thresholds);
    decisions.push_back(decision);
  }
  return decisions;
}

LabelResult label_text(std::string_view text, const Network& net,
                       const Thresholds& thresholds,
                       const DescriptorContext& context,
                       const LabelOptions& options) {
  check_context(context, net.context_size);
  TokenizerOptions tokenizer_options =
      context.lexicon->tokenizer_options(options.sentinel);

  std::vector<Token> stream;
  for (Token& token : tokenize(text, tokenizer_options))
    if (token.kind != TokenKind::Sentinel) stream.push_back(std::move(token));

  LabelResult result;
  std::vector<std::pair<std::size_t, const std::string*>> insertions;
  for (const CandidateSite& site : find_candidates(stream)) {
    SiteDecision decision;
    decision.site = site;
    decision.score = forward(
        net, assemble_input(stream, site.index, net.context_size, context));
    decision.decision = classify(decision.score, thresholds);
    const Token& token = stream[site.index];
    const std::size_t end = token.byte_offset + token.text.size();
    if (decision.decision == Decision::Boundary)
      insertions.emplace_back(end, &options.sentinel);
    else if (decision.decision == Decision::Ambiguous)
      insertions.emplace_back(end, &options.ambiguous_marker);
    result.decisions.push_back(decision);
  }

  std::string out;
  out.reserve(text.size() + insertions.size() * 8);
  std::size_t last = 0;
  for (const auto& [pos, marker] : insertions) {
    out.append(text.substr(last, pos - last));
    out.push_back(' ');
    out.append(*marker);
    last = pos;
  }
  out.append(text.substr(last));
  result.text = std::move(out);
  return result;
}

std::string strip_markers(std::string_view text, std::string_view marker) {
  if (marker.empty()) return std::string(text);
  const std::string spaced = " " + std::string(marker);
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text.substr(pos).starts_with(spaced)) {
      pos += spaced.size();
    } else if (text.substr(pos).starts_with(marker)) {
      pos += marker.size();
    } else {
      out.push_back(text[pos]);
      ++pos;
    }
  }
  return out;
}

}  // namespace satz
