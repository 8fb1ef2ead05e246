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
//
// Acceptance gate for the toolkit. Each numbered criterion prints exactly
// one PASS/FAIL line; the process exits nonzero if any criterion fails.
// Tolerances and runtime budgets are fixed here on purpose — loosening them
// is not an acceptable way to make this program exit zero.

#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "satz/corpus_gen.hpp"
#include "satz/descriptor.hpp"
#include "satz/evaluation.hpp"
#include "satz/lexicon.hpp"
#include "satz/network.hpp"
#include "satz/segmenter.hpp"
#include "satz/token.hpp"

using namespace satz;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (ok && !condition) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

std::string fmt(double value, const char* format = "%.4g") {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, value);
  return buffer;
}

double category_sum(const DescriptorArray& d) {
  double sum = 0.0;
  for (std::size_t s = 0; s < kDescriptorSize; ++s) {
    if (s == category::kFlagCapitalized || s == category::kFlagCapAfterCandidate)
      continue;
    sum += d[s];
  }
  return sum;
}

// ---------------------------------------------------------------------------
// 1. Descriptor normalization: 10,000 random tag sets must produce category
//    probabilities summing to 1 within 1e-9, invariant under frequency
//    scaling within 1e-12, in under a second.
// ---------------------------------------------------------------------------
Outcome criterion_1(const CategoryMapping& mapping) {
  Outcome outcome;
  const std::vector<std::string> tag_pool = {
      "NN", "NNS", "VB",  "VBD", "VBG", "JJ", "RB",  "AT", "CC",  "PPS",
      "IN", "NP",  "CD",  "MD",  "ABR", ".",  ",",   ":",  "(",   ")",
      "CHAR", "POS", "UH", "XQ1", "ZZQ"};  // last two have no mapping
  std::mt19937_64 rng(20260825);
  std::uniform_real_distribution<double> freq(0.001, 1000.0);
  const Token plain{"x", TokenKind::Word, 0, false};

  const auto start = std::chrono::steady_clock::now();
  for (int i = 0; i < 10000 && outcome.ok; ++i) {
    TagFrequencies tags;
    const std::size_t n_tags = 1 + rng() % 6;
    while (tags.entries.size() < n_tags)
      tags.entries[tag_pool[rng() % tag_pool.size()]] = freq(rng);

    const DescriptorArray d = build_descriptor(plain, tags, mapping, false);
    outcome.require(std::fabs(category_sum(d) - 1.0) <= 1e-9,
                    "category sum " + fmt(category_sum(d), "%.12g") +
                        " is off by more than 1e-9");

    for (double scale : {1e-6, 1e6}) {
      TagFrequencies scaled = tags;
      for (auto& [tag, f] : scaled.entries) f *= scale;
      const DescriptorArray ds =
          build_descriptor(plain, scaled, mapping, false);
      for (std::size_t s = 0; s < kDescriptorSize; ++s) {
        outcome.require(std::fabs(d[s] - ds[s]) <= 1e-12,
                        "slot " + std::to_string(s) + " moved by " +
                            fmt(std::fabs(d[s] - ds[s]), "%.3g") +
                            " under scaling by " + fmt(scale));
      }
    }
  }
  const double elapsed = seconds_since(start);
  outcome.require(elapsed < 1.0,
                  "took " + fmt(elapsed) + " s, budget is 1 s");
  if (outcome.ok) outcome.detail = fmt(elapsed) + " s for 10000 tag sets";
  return outcome;
}

// ---------------------------------------------------------------------------
// 2. "well" golden test: the canonical six-way tag entry must yield
//    noun = 18/762 and verb = 5/762 under the shipped mapping, to 1e-12.
// ---------------------------------------------------------------------------
Outcome criterion_2(const Lexicon& lexicon, const CategoryMapping& mapping) {
  Outcome outcome;
  const Token well{"well", TokenKind::Word, 0, false};
  const TagFrequencies tags = lexicon.lookup(well);

  const std::vector<std::pair<std::string, double>> expected = {
      {"JJ", 15}, {"NN", 18}, {"QL", 68}, {"RB", 634}, {"UH", 22}, {"VB", 5}};
  outcome.require(tags.entries.size() == expected.size(),
                  "expected 6 tags, found " +
                      std::to_string(tags.entries.size()));
  for (const auto& [tag, f] : expected) {
    outcome.require(tags.contains(tag) && tags.entries.at(tag) == f,
                    "tag " + tag + " missing or not " + fmt(f));
  }

  const DescriptorArray d = build_descriptor(well, tags, mapping, false);
  outcome.require(std::fabs(category_sum(d) - 1.0) <= 1e-12,
                  "category sum is not 1 within 1e-12");
  outcome.require(std::fabs(d[category::kNoun] - 18.0 / 762.0) <= 1e-12,
                  "noun probability " + fmt(d[category::kNoun], "%.17g") +
                      " != 18/762");
  outcome.require(std::fabs(d[category::kVerb] - 5.0 / 762.0) <= 1e-12,
                  "verb probability " + fmt(d[category::kVerb], "%.17g") +
                      " != 5/762");
  if (outcome.ok)
    outcome.detail = "noun 18/762, verb 5/762 under the shipped mapping";
  return outcome;
}

// ---------------------------------------------------------------------------
// 3. Gradient oracle: analytic backprop matches central finite differences
//    (h = 1e-5, relative error < 1e-4) over 100 random configurations of
//    k in {2,4,6} and j in {1,2,3}, within 10 seconds.
// ---------------------------------------------------------------------------
Outcome criterion_3() {
  Outcome outcome;
  const double h = 1e-5;
  const double tol = 1e-4;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const auto rel_err = [](double a, double b) {
    return std::fabs(a - b) /
           std::max({std::fabs(a), std::fabs(b), 1e-4});
  };

  const auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  for (int config = 0; config < 100 && outcome.ok; ++config) {
    const std::size_t k = 2 * (1 + config % 3);       // 2, 4, 6
    const std::size_t j = 1 + (config / 3) % 3;       // 1, 2, 3
    Network net = init_network(k, j, 1000 + config, 0.5);
    std::vector<double> input(net.input_size());
    for (double& x : input) x = unit(rng);
    const double target = (rng() % 2) ? 1.0 : 0.0;

    const Gradient analytic = gradient(net, input, target);
    const auto energy = [&](const Network& n) {
      const double o = forward(n, input);
      return 0.5 * (target - o) * (target - o);
    };
    const auto check = [&](double* slot, double got, const char* name) {
      const double saved = *slot;
      *slot = saved + h;
      const double up = energy(net);
      *slot = saved - h;
      const double down = energy(net);
      *slot = saved;
      const double fd = (up - down) / (2.0 * h);
      ++checked;
      outcome.require(rel_err(got, fd) < tol,
                      std::string(name) + " gradient off: analytic " +
                          fmt(got, "%.9g") + " vs fd " + fmt(fd, "%.9g") +
                          " (k=" + std::to_string(k) +
                          " j=" + std::to_string(j) + ")");
    };

    for (std::size_t i = 0; i < net.w_ih.size() && outcome.ok; ++i)
      check(&net.w_ih[i], analytic.w_ih[i], "w_ih");
    for (std::size_t i = 0; i < net.b_h.size() && outcome.ok; ++i)
      check(&net.b_h[i], analytic.b_h[i], "b_h");
    for (std::size_t i = 0; i < net.w_ho.size() && outcome.ok; ++i)
      check(&net.w_ho[i], analytic.w_ho[i], "w_ho");
    if (outcome.ok) check(&net.b_o, analytic.b_o, "b_o");
  }
  const double elapsed = seconds_since(start);
  outcome.require(elapsed < 10.0,
                  "took " + fmt(elapsed) + " s, budget is 10 s");
  if (outcome.ok)
    outcome.detail = std::to_string(checked) + " partials over 100 configs, " +
                     fmt(elapsed) + " s";
  return outcome;
}

// ---------------------------------------------------------------------------
// 4. Convergence sanity: a 200-case linearly separable toy set reaches
//    training error < 0.01 within 500 epochs, deterministically, in < 5 s.
// ---------------------------------------------------------------------------
Outcome criterion_4() {
  Outcome outcome;
  const std::size_t k = 2;
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<TrainingExample> cases(200);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    cases[i].target = (i % 2 == 0) ? 1.0 : 0.0;
    cases[i].input.resize(k * kDescriptorSize);
    for (double& x : cases[i].input) x = unit(rng);
    cases[i].input[5] = cases[i].target;  // the separating coordinate
  }

  TrainConfig config;
  config.eta = 2.0;
  config.max_epochs = 500;
  config.patience = 500;  // let it run the full budget if needed
  config.min_epochs = 20;
  config.seed = 4;

  const auto start = std::chrono::steady_clock::now();
  Network net = init_network(k, 2, 4, 0.5);
  TrainingReport report = train(net, cases, {}, config);
  const double elapsed = seconds_since(start);

  outcome.require(report.training_error < 0.01,
                  "training error " + fmt(report.training_error, "%.6g") +
                      " after " + std::to_string(report.epochs) +
                      " epochs, needed < 0.01 within 500");
  outcome.require(elapsed < 5.0,
                  "took " + fmt(elapsed) + " s, budget is 5 s");

  Network again = init_network(k, 2, 4, 0.5);
  TrainingReport replay = train(again, cases, {}, config);
  outcome.require(again == net && replay.epochs == report.epochs &&
                      replay.training_error == report.training_error,
                  "re-running the same seed gave different weights");
  if (outcome.ok)
    outcome.detail = "error " + fmt(report.training_error, "%.3g") + " at epoch " +
                     std::to_string(report.best_epoch) + ", " + fmt(elapsed) +
                     " s, deterministic";
  return outcome;
}

// ---------------------------------------------------------------------------
// 5. End-to-end desk scale, with artifacts reused by criteria 6, 7, 8, 10.
// ---------------------------------------------------------------------------
struct DeskScale {
  std::string train_text, cross_text, test_text;
  ExtractionResult train_set, cross_set, test_set;
  Network net;
  std::vector<double> test_scores;
  std::vector<int> test_labels;
  double lower_bound = 0.0;
  double accuracy = 0.0;
  bool ready = false;
};

// Extract + assemble + train + score one corpus triple under `ctx`.
// Returns the accuracy at (0.5, 0.5) on the test portion.
double run_pipeline(const std::string& train_text,
                    const std::string& cross_text,
                    const std::string& test_text, const Lexicon& lexicon,
                    const DescriptorContext& ctx, Network* net_out = nullptr,
                    std::vector<double>* scores_out = nullptr,
                    std::vector<int>* labels_out = nullptr,
                    double* seconds_out = nullptr) {
  const TokenizerOptions options = lexicon.tokenizer_options();
  const ExtractionResult train_set = extract_labels(train_text, options);
  const ExtractionResult cross_set = extract_labels(cross_text, options);
  const ExtractionResult test_set = extract_labels(test_text, options);

  const std::size_t k = 6;
  const std::vector<TrainingExample> train_examples =
      make_training_set(train_set, k, ctx);
  const std::vector<TrainingExample> cross_examples =
      make_training_set(cross_set, k, ctx);

  Network net = init_network(k, 2, 0, 0.5);
  TrainConfig config;  // stock defaults: eta 0.1 etc.
  const auto start = std::chrono::steady_clock::now();
  train(net, train_examples, cross_examples, config);
  if (seconds_out) *seconds_out = seconds_since(start);

  std::vector<double> scores;
  std::vector<int> labels;
  scores.reserve(test_set.cases.size());
  for (const SiteDecision& d : score_cases(test_set.tokens, test_set.cases,
                                           net, Thresholds(0.5, 0.5), ctx))
    scores.push_back(d.score);
  for (const LabeledCase& c : test_set.cases) labels.push_back(c.label);

  const EvalReport report = evaluate(scores, labels, Thresholds(0.5, 0.5));
  if (net_out) *net_out = std::move(net);
  if (scores_out) *scores_out = std::move(scores);
  if (labels_out) *labels_out = std::move(labels);
  return report.accuracy;
}

Outcome criterion_5(const Lexicon& lexicon, const CategoryMapping& mapping,
                    DeskScale& desk) {
  Outcome outcome;
  GeneratorSpec spec;
  spec.sentences = 375;
  desk.train_text = generate_corpus(spec, 11).text;
  spec.sentences = 190;
  desk.cross_text = generate_corpus(spec, 22).text;
  spec.sentences = 1500;
  GeneratedCorpus test = generate_corpus(spec, 33);
  desk.test_text = test.text;

  const TokenizerOptions options = lexicon.tokenizer_options();
  desk.train_set = extract_labels(desk.train_text, options);
  desk.cross_set = extract_labels(desk.cross_text, options);
  desk.test_set = extract_labels(desk.test_text, options);

  const std::size_t n_train = desk.train_set.cases.size();
  const std::size_t n_cross = desk.cross_set.cases.size();
  const std::size_t n_test = desk.test_set.cases.size();
  outcome.require(n_train >= 400 && n_train <= 600,
                  "training cases " + std::to_string(n_train) +
                      " outside [400, 600]");
  outcome.require(n_cross >= 200 && n_cross <= 300,
                  "cross cases " + std::to_string(n_cross) +
                      " outside [200, 300]");
  outcome.require(n_test >= 1800 && n_test <= 2200,
                  "test cases " + std::to_string(n_test) +
                      " outside [1800, 2200]");

  desk.lower_bound = corpus_stats(desk.test_set).lower_bound;
  outcome.require(desk.lower_bound >= 0.72 && desk.lower_bound <= 0.78,
                  "test lower bound " + fmt(desk.lower_bound, "%.4f") +
                      " outside [0.72, 0.78]");

  DescriptorContext ctx;
  ctx.lexicon = &lexicon;
  ctx.mapping = &mapping;
  double train_seconds = 0.0;
  desk.accuracy = run_pipeline(desk.train_text, desk.cross_text,
                               desk.test_text, lexicon, ctx, &desk.net,
                               &desk.test_scores, &desk.test_labels,
                               &train_seconds);

  outcome.require(desk.accuracy >= 0.95,
                  "accuracy " + fmt(desk.accuracy, "%.4f") + " below 0.95");
  outcome.require(desk.accuracy >= desk.lower_bound + 0.15,
                  "accuracy " + fmt(desk.accuracy, "%.4f") +
                      " not 15 points above the lower bound " +
                      fmt(desk.lower_bound, "%.4f"));
  outcome.require(train_seconds < 60.0,
                  "training took " + fmt(train_seconds) +
                      " s, budget is 60 s");
  desk.ready = outcome.ok;
  if (outcome.ok)
    outcome.detail = std::to_string(n_train) + "/" + std::to_string(n_cross) +
                     "/" + std::to_string(n_test) + " cases, accuracy " +
                     fmt(desk.accuracy, "%.4f") + " vs bound " +
                     fmt(desk.lower_bound, "%.4f") + ", trained in " +
                     fmt(train_seconds) + " s";
  return outcome;
}

// ---------------------------------------------------------------------------
// 6. Threshold sweep on the cached criterion-5 scores: widening the
//    ambiguity band never adds errors, and (0.5, 0.5) leaves nothing
//    unlabeled.
// ---------------------------------------------------------------------------
Outcome criterion_6(const DeskScale& desk) {
  Outcome outcome;
  if (!desk.ready) {
    outcome.require(false, "skipped: criterion 5 did not produce a model");
    return outcome;
  }
  const std::vector<std::pair<double, double>> pairs = {
      {0.5, 0.5}, {0.4, 0.6}, {0.3, 0.7}, {0.2, 0.8}, {0.1, 0.9}};
  const std::vector<SweepRow> rows =
      sweep_thresholds(desk.test_scores, desk.test_labels, pairs);

  outcome.require(rows.size() == 5, "expected 5 sweep rows");
  outcome.require(rows[0].report.not_labeled == 0,
                  "(0.5, 0.5) left " +
                      std::to_string(rows[0].report.not_labeled) +
                      " cases unlabeled");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const EvalReport& narrow = rows[i - 1].report;
    const EvalReport& wide = rows[i].report;
    outcome.require(wide.false_pos + wide.false_neg <=
                        narrow.false_pos + narrow.false_neg,
                    "errors grew between sweep rows " + std::to_string(i) +
                        " and " + std::to_string(i + 1));
    outcome.require(wide.not_labeled >= narrow.not_labeled,
                    "not_labeled shrank between sweep rows " +
                        std::to_string(i) + " and " + std::to_string(i + 1));
  }
  if (outcome.ok) {
    std::ostringstream summary;
    summary << "errors ";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) summary << " -> ";
      summary << rows[i].report.false_pos + rows[i].report.false_neg;
    }
    outcome.detail = summary.str();
  }
  return outcome;
}

// ---------------------------------------------------------------------------
// 7. Single-case robustness: lowercase every corpus, retrain, and lose
//    less than 5 accuracy points while staying above the baseline.
// ---------------------------------------------------------------------------
Outcome criterion_7(const Lexicon& lexicon, const CategoryMapping& mapping,
                    const DeskScale& desk) {
  Outcome outcome;
  if (!desk.ready) {
    outcome.require(false, "skipped: criterion 5 did not produce a model");
    return outcome;
  }
  const std::string train_low = case_fold(desk.train_text, CaseMode::Lower);
  const std::string cross_low = case_fold(desk.cross_text, CaseMode::Lower);
  const std::string test_low = case_fold(desk.test_text, CaseMode::Lower);

  DescriptorContext ctx;
  ctx.lexicon = &lexicon;
  ctx.mapping = &mapping;
  const double folded_accuracy =
      run_pipeline(train_low, cross_low, test_low, lexicon, ctx);

  const double folded_bound =
      corpus_stats(test_low, lexicon.tokenizer_options()).lower_bound;
  outcome.require(folded_bound == desk.lower_bound,
                  "case folding changed the candidate set");
  outcome.require(folded_accuracy > desk.accuracy - 0.05,
                  "lowercased accuracy " + fmt(folded_accuracy, "%.4f") +
                      " dropped 5+ points from " + fmt(desk.accuracy, "%.4f"));
  outcome.require(folded_accuracy > folded_bound,
                  "lowercased accuracy " + fmt(folded_accuracy, "%.4f") +
                      " is not above the baseline " +
                      fmt(folded_bound, "%.4f"));
  if (outcome.ok)
    outcome.detail = fmt(desk.accuracy, "%.4f") + " mixed-case vs " +
                     fmt(folded_accuracy, "%.4f") + " lowercased";
  return outcome;
}

// ---------------------------------------------------------------------------
// 8. Lexicon-shrink trend: training with a lexicon cut to 1/6 and to 1/10
//    of its word entries (abbreviations kept) moves accuracy < 2 points.
// ---------------------------------------------------------------------------
Outcome criterion_8(const Lexicon& lexicon, const CategoryMapping& mapping,
                    const DeskScale& desk) {
  Outcome outcome;
  if (!desk.ready) {
    outcome.require(false, "skipped: criterion 5 did not produce a model");
    return outcome;
  }
  std::string summary;
  for (std::size_t divisor : {6, 10}) {
    const Lexicon small = lexicon.truncated(lexicon.word_count() / divisor);
    DescriptorContext ctx;
    ctx.lexicon = &small;
    ctx.mapping = &mapping;
    const double accuracy = run_pipeline(desk.train_text, desk.cross_text,
                                         desk.test_text, small, ctx);
    outcome.require(std::fabs(accuracy - desk.accuracy) < 0.02,
                    "1/" + std::to_string(divisor) + " lexicon accuracy " +
                        fmt(accuracy, "%.4f") + " drifted 2+ points from " +
                        fmt(desk.accuracy, "%.4f"));
    if (!summary.empty()) summary += ", ";
    summary += "1/" + std::to_string(divisor) + ": " + fmt(accuracy, "%.4f");
  }
  if (outcome.ok)
    outcome.detail = "full: " + fmt(desk.accuracy, "%.4f") + ", " + summary;
  return outcome;
}

// ---------------------------------------------------------------------------
// 9. Baseline identity: a constant "boundary" answer scores exactly the
//    lower bound — the same double, not an approximation.
// ---------------------------------------------------------------------------
Outcome criterion_9(const Lexicon& lexicon, const DeskScale& desk) {
  Outcome outcome;
  std::mt19937_64 rng(9);

  // Random label vectors, including edge shapes.
  for (int trial = 0; trial < 50 && outcome.ok; ++trial) {
    const std::size_t n = 1 + rng() % 211;
    std::vector<int> labels(n);
    for (auto& label : labels)
      label = (trial == 0) ? 1 : (trial == 1 ? 0 : static_cast<int>(rng() % 2));
    const std::vector<double> scores(n, 1.0);
    const EvalReport r = evaluate(scores, labels, Thresholds(0.5, 0.5));
    outcome.require(r.accuracy == r.lower_bound,
                    "trial " + std::to_string(trial) + ": accuracy " +
                        fmt(r.accuracy, "%.17g") + " != lower bound " +
                        fmt(r.lower_bound, "%.17g"));
  }

  // The same identity on a real annotated corpus, against corpus_stats.
  GeneratorSpec spec;
  spec.sentences = 200;
  const GeneratedCorpus corpus = generate_corpus(spec, 99);
  const ExtractionResult extraction =
      extract_labels(corpus.text, lexicon.tokenizer_options());
  const CorpusStats stats = corpus_stats(extraction);
  std::vector<double> ones(extraction.cases.size(), 1.0);
  std::vector<int> labels;
  for (const LabeledCase& c : extraction.cases) labels.push_back(c.label);
  const EvalReport constant = evaluate(ones, labels, Thresholds(0.5, 0.5));
  outcome.require(constant.accuracy == stats.lower_bound,
                  "constant labeler accuracy != corpus_stats lower bound");
  outcome.require(constant.accuracy == corpus.lower_bound,
                  "constant labeler accuracy != generator lower bound");

  if (desk.ready) {
    std::vector<double> desk_ones(desk.test_labels.size(), 1.0);
    const EvalReport r =
        evaluate(desk_ones, desk.test_labels, Thresholds(0.5, 0.5));
    outcome.require(r.accuracy == desk.lower_bound,
                    "identity fails on the criterion-5 test corpus");
  }
  if (outcome.ok) outcome.detail = "bitwise equal on 52 corpora";
  return outcome;
}

// ---------------------------------------------------------------------------
// 10. Persistence: weights survive a save/load round trip bit-identically,
//     and stripping the inserted sentinels reproduces the input bytes.
// ---------------------------------------------------------------------------
Outcome criterion_10(const Lexicon& lexicon, const CategoryMapping& mapping,
                     const DeskScale& desk) {
  Outcome outcome;
  if (!desk.ready) {
    outcome.require(false, "skipped: criterion 5 did not produce a model");
    return outcome;
  }
  const fs::path dir =
      fs::temp_directory_path() / ("satz_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);

  const auto slurp = [](const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return std::move(buffer).str();
  };

  // Round trip the trained network and an untrained one.
  int round_trips = 0;
  for (const Network& original :
       {desk.net, init_network(6, 3, 987654321, 0.5)}) {
    const fs::path first = dir / ("w" + std::to_string(round_trips) + "a.net");
    const fs::path second = dir / ("w" + std::to_string(round_trips) + "b.net");
    save_weights(original, first);
    const Network loaded = load_weights(first);
    outcome.require(loaded == original,
                    "loaded network differs from the saved one");
    save_weights(loaded, second);
    outcome.require(slurp(first) == slurp(second),
                    "re-saving a loaded network changed the file bytes");
    ++round_trips;
  }

  // Labeling round trip: plain text in, markers out, strip, compare.
  const std::string plain = strip_markers(desk.test_text, "</s>");
  DescriptorContext ctx;
  ctx.lexicon = &lexicon;
  ctx.mapping = &mapping;
  const LabelResult labeled =
      label_text(plain, desk.net, Thresholds(0.5, 0.5), ctx);
  std::string stripped = strip_markers(labeled.text, "</s>");
  stripped = strip_markers(stripped, "<A>");
  outcome.require(stripped == plain,
                  "stripping sentinels did not reproduce the input bytes");
  outcome.require(labeled.text != plain,
                  "labeling inserted no sentinels at all");

  std::error_code ec;
  fs::remove_all(dir, ec);
  if (outcome.ok)
    outcome.detail = "2 weight round trips, " +
                     std::to_string(labeled.decisions.size()) +
                     " site labeling round trip";
  return outcome;
}

}  // namespace

int main() {
  const Lexicon lexicon = Lexicon::load_dir(SATZ_DATA_DIR "/lexicon");
  const CategoryMapping mapping =
      CategoryMapping::load(SATZ_DATA_DIR "/trans.tab");

  DeskScale desk;
  struct Row {
    const char* name;
    Outcome outcome;
  };
  std::vector<Row> rows;
  rows.push_back({"descriptor normalization", criterion_1(mapping)});
  rows.push_back({"'well' golden frequencies", criterion_2(lexicon, mapping)});
  rows.push_back({"gradient vs finite differences", criterion_3()});
  rows.push_back({"separable-set convergence", criterion_4()});
  rows.push_back({"end-to-end desk scale", criterion_5(lexicon, mapping, desk)});
  rows.push_back({"threshold sweep monotonicity", criterion_6(desk)});
  rows.push_back({"single-case robustness", criterion_7(lexicon, mapping, desk)});
  rows.push_back({"lexicon-shrink stability", criterion_8(lexicon, mapping, desk)});
  rows.push_back({"constant-labeler baseline identity",
                  criterion_9(lexicon, desk)});
  rows.push_back({"persistence round trips", criterion_10(lexicon, mapping, desk)});

  bool all_ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    all_ok = all_ok && row.outcome.ok;
    std::printf("%s %2zu - %s%s%s\n", row.outcome.ok ? "PASS" : "FAIL", i + 1,
                row.name, row.outcome.detail.empty() ? "" : ": ",
                row.outcome.detail.c_str());
  }
  return all_ok ? 0 : 1;
}
