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

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "satz/error.hpp"
#include "satz/lexicon.hpp"

using namespace satz;

namespace {

const TokenizerOptions& stock_options() {
  static TokenizerOptions options =
      Lexicon::load_dir(SATZ_DATA_DIR "/lexicon").tokenizer_options();
  return options;
}

struct Counts {
  std::size_t tp = 0, tn = 0, fp = 0, fn = 0, nl = 0, wc = 0;
};

// Straight-line recount of the confusion counts, written without the
// Decision machinery so it can serve as an oracle for evaluate/sweep.
Counts recount(const std::vector<double>& scores,
               const std::vector<int>& labels, double t0, double t1) {
  Counts c;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] < t0) {
      labels[i] ? ++c.fn : ++c.tn;
    } else if (scores[i] >= t1) {
      labels[i] ? ++c.tp : ++c.fp;
    } else {
      ++c.nl;
      if ((scores[i] >= 0.5) == (labels[i] == 1)) ++c.wc;
    }
  }
  return c;
}

void check_against(const EvalReport& report, const Counts& c) {
  CHECK(report.true_pos == c.tp);
  CHECK(report.true_neg == c.tn);
  CHECK(report.false_pos == c.fp);
  CHECK(report.false_neg == c.fn);
  CHECK(report.not_labeled == c.nl);
  CHECK(report.were_correct == c.wc);
}

}  // namespace

TEST_SUITE("evaluation") {

TEST_CASE("evaluate sorts cases into the confusion cells") {
  std::vector<double> scores = {0.9, 0.8, 0.1, 0.2, 0.5, 0.4, 0.6};
  std::vector<int> labels = {1, 0, 0, 1, 1, 0, 0};
  EvalReport r = evaluate(scores, labels, Thresholds(0.3, 0.7));
  CHECK(r.total_cases == 7);
  CHECK(r.true_pos == 1);   // 0.9 / 1
  CHECK(r.false_pos == 1);  // 0.8 / 0
  CHECK(r.true_neg == 1);   // 0.1 / 0
  CHECK(r.false_neg == 1);  // 0.2 / 1
  CHECK(r.not_labeled == 3);
  // 0.5/1 reads as boundary (correct); 0.4/0 reads as non-boundary
  // (correct); 0.6/0 reads as boundary (wrong).
  CHECK(r.were_correct == 2);
  CHECK(r.lower_bound == 3.0 / 7.0);
  CHECK(r.accuracy == 2.0 / 7.0);
  CHECK(r.error_rate == 2.0 / 7.0);
}

TEST_CASE("every case lands in exactly one cell") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> scores(257);
  std::vector<int> labels(257);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    scores[i] = unit(rng);
    labels[i] = rng() % 2;
  }
  for (auto [t0, t1] : {std::pair{0.5, 0.5}, {0.25, 0.75}, {0.0, 1.0}}) {
    EvalReport r = evaluate(scores, labels, Thresholds(t0, t1));
    CHECK(r.true_pos + r.true_neg + r.false_pos + r.false_neg +
              r.not_labeled ==
          r.total_cases);
    CHECK(r.were_correct <= r.not_labeled);
    check_against(r, recount(scores, labels, t0, t1));
  }
}

TEST_CASE("a constant boundary answer scores exactly the lower bound") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 97;
    std::vector<double> scores(n, 1.0);
    std::vector<int> labels(n);
    for (auto& label : labels) label = rng() % 2;
    EvalReport r = evaluate(scores, labels, Thresholds(0.5, 0.5));
    // Identical division, so identical doubles — not merely close.
    CHECK(r.accuracy == r.lower_bound);
    CHECK(r.not_labeled == 0);
  }
}

TEST_CASE("evaluate validates its inputs") {
  CHECK_THROWS_AS(
      evaluate({0.5, 0.5}, {1}, Thresholds(0.5, 0.5)), ArgumentError);
  CHECK_THROWS_AS(
      evaluate({0.5}, {2}, Thresholds(0.5, 0.5)), ArgumentError);
  CHECK_THROWS_AS(
      evaluate({0.5}, {-1}, Thresholds(0.5, 0.5)), ArgumentError);
}

TEST_CASE("evaluate of nothing reports zeros, not NaNs") {
  EvalReport r = evaluate({}, {}, Thresholds(0.5, 0.5));
  CHECK(r.total_cases == 0);
  CHECK(r.accuracy == 0.0);
  CHECK(r.lower_bound == 0.0);
  CHECK(r.error_rate == 0.0);
}

TEST_CASE("evaluate is invariant under case reordering") {
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::pair<double, int>> cases(64);
  for (auto& c : cases) c = {unit(rng), static_cast<int>(rng() % 2)};

  auto run = [](const std::vector<std::pair<double, int>>& cs) {
    std::vector<double> scores;
    std::vector<int> labels;
    for (const auto& [s, l] : cs) {
      scores.push_back(s);
      labels.push_back(l);
    }
    return evaluate(scores, labels, Thresholds(0.3, 0.7));
  };

  EvalReport before = run(cases);
  std::shuffle(cases.begin(), cases.end(), rng);
  EvalReport after = run(cases);
  CHECK(before.true_pos == after.true_pos);
  CHECK(before.true_neg == after.true_neg);
  CHECK(before.false_pos == after.false_pos);
  CHECK(before.false_neg == after.false_neg);
  CHECK(before.not_labeled == after.not_labeled);
  CHECK(before.were_correct == after.were_correct);
  CHECK(before.accuracy == after.accuracy);
}

TEST_CASE("sweep rows agree with an independent recount") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> scores(300);
  std::vector<int> labels(300);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    scores[i] = unit(rng);
    labels[i] = rng() % 2;
  }
  const std::vector<std::pair<double, double>> pairs = {
      {0.5, 0.5}, {0.4, 0.6}, {0.3, 0.7}, {0.2, 0.8}, {0.1, 0.9}};
  std::vector<SweepRow> rows = sweep_thresholds(scores, labels, pairs);
  REQUIRE(rows.size() == pairs.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].thresholds.t0 == pairs[i].first);
    CHECK(rows[i].thresholds.t1 == pairs[i].second);
    check_against(rows[i].report, recount(scores, labels, pairs[i].first,
                                          pairs[i].second));
  }
}

TEST_CASE("widening the band trades errors for unlabeled cases") {
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> scores(500);
  std::vector<int> labels(500);
  for (std::size_t i = 0; i < scores.size(); ++i) {
    scores[i] = unit(rng);
    labels[i] = rng() % 2;
  }
  std::vector<SweepRow> rows = sweep_thresholds(
      scores, labels,
      {{0.5, 0.5}, {0.4, 0.6}, {0.3, 0.7}, {0.2, 0.8}, {0.1, 0.9}});
  CHECK(rows.front().report.not_labeled == 0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const EvalReport& narrow = rows[i - 1].report;
    const EvalReport& wide = rows[i].report;
    CHECK(wide.false_pos + wide.false_neg <=
          narrow.false_pos + narrow.false_neg);
    CHECK(wide.not_labeled >= narrow.not_labeled);
    // A case leaving the labeled set moves to not_labeled, one for one.
    const std::size_t narrow_labeled = narrow.true_pos + narrow.true_neg +
                                       narrow.false_pos + narrow.false_neg;
    const std::size_t wide_labeled =
        wide.true_pos + wide.true_neg + wide.false_pos + wide.false_neg;
    CHECK(narrow_labeled - wide_labeled ==
          wide.not_labeled - narrow.not_labeled);
  }
}

TEST_CASE("a bad sweep pair is reported by position") {
  std::vector<double> scores = {0.5};
  std::vector<int> labels = {1};
  try {
    sweep_thresholds(scores, labels, {{0.5, 0.5}, {0.9, 0.1}});
    FAIL("expected ArgumentError");
  } catch (const ArgumentError& e) {
    CHECK(std::string(e.what()).find("pair #2") != std::string::npos);
  }
}

TEST_CASE("case folding converts letters and nothing else") {
  CHECK(case_fold("Mr. Gray's No. 9 CAFÉ.", CaseMode::Lower) ==
        "mr. gray's no. 9 café.");
  CHECK(case_fold("naïve café", CaseMode::Upper) == "NAÏVE CAFÉ");
  CHECK(case_fold("ÄÖÜ 1,234 -- </s>", CaseMode::Lower) ==
        "äöü 1,234 -- </s>");
}

TEST_CASE("case folding is idempotent") {
  const std::string text = "Dr. Watson MET Mrs. Morstan at 5 p.m. </s>\n";
  const std::string lower = case_fold(text, CaseMode::Lower);
  CHECK(case_fold(lower, CaseMode::Lower) == lower);
  const std::string upper = case_fold(text, CaseMode::Upper);
  CHECK(case_fold(upper, CaseMode::Upper) == upper);
}

TEST_CASE("corpus statistics summarize an annotated text") {
  CorpusStats stats =
      corpus_stats("He walked. </s> She ran. Done. </s>", stock_options());
  CHECK(stats.tokens == 8);
  CHECK(stats.candidates == 3);
  CHECK(stats.boundaries == 2);
  CHECK(stats.warnings == 0);
  CHECK(stats.lower_bound == 2.0 / 3.0);
}

TEST_CASE("corpus statistics count orphan-sentinel warnings") {
  CorpusStats stats = corpus_stats("He </s> left. </s>", stock_options());
  CHECK(stats.warnings == 1);
  CHECK(stats.candidates == 1);
  CHECK(stats.boundaries == 1);
  CHECK(stats.lower_bound == 1.0);
}

TEST_CASE("corpus statistics of an empty text are all zero") {
  CorpusStats stats = corpus_stats("", stock_options());
  CHECK(stats.tokens == 0);
  CHECK(stats.candidates == 0);
  CHECK(stats.lower_bound == 0.0);
}

TEST_CASE("error sites are classed by their surface shape") {
  auto classify_text = [](std::string_view text, std::size_t which = 0) {
    auto tokens = tokenize(text, stock_options());
    auto sites = find_candidates(tokens);
    REQUIRE(sites.size() > which);
    return classify_error_site(tokens, sites[which]);
  };

  CHECK(classify_text("Dr. Gray left") == ErrorClass::Abbreviation);
  CHECK(classify_text("He waited...") == ErrorClass::Ellipsis);
  CHECK(classify_text("He waited..") == ErrorClass::Ellipsis);
  CHECK(classify_text("'Go.' he said") == ErrorClass::QuoteAdjacent);
  CHECK(classify_text("He said 'run'.") == ErrorClass::QuoteAdjacent);
  CHECK(classify_text("He left.") == ErrorClass::Other);
  CHECK(classify_text("Really?!") == ErrorClass::Other);

  CHECK(std::string(error_class_name(ErrorClass::Abbreviation)) ==
        "abbreviation");
  CHECK(std::string(error_class_name(ErrorClass::Ellipsis)) == "ellipsis");
  CHECK(std::string(error_class_name(ErrorClass::QuoteAdjacent)) ==
        "quote-adjacent");
  CHECK(std::string(error_class_name(ErrorClass::Other)) == "other");

  auto tokens = tokenize("a .", stock_options());
  CHECK_THROWS_AS(classify_error_site(tokens, CandidateSite{9, '.'}),
                  ArgumentError);
}

TEST_CASE("compare_labeled grades a hypothesis against a reference") {
  ExtractionResult gold =
      extract_labels("It was one. </s> It was two. It was all. </s>",
                     stock_options());
  ExtractionResult hyp =
      extract_labels("It was one. It was two. </s> It was all. </s>",
                     stock_options());
  FileComparison c = compare_labeled(gold, hyp);
  REQUIRE(c.tokens_match);
  CHECK(c.report.total_cases == 3);
  CHECK(c.report.true_pos == 1);   // the final boundary
  CHECK(c.report.false_neg == 1);  // missed boundary after "one."
  CHECK(c.report.false_pos == 1);  // invented boundary after "two."
  CHECK(c.report.true_neg == 0);
  CHECK(c.report.not_labeled == 0);
}

TEST_CASE("compare_labeled on identical labelings is all true cells") {
  const std::string text = "He left. </s> She stayed. Done. </s>";
  ExtractionResult gold = extract_labels(text, stock_options());
  ExtractionResult hyp = extract_labels(text, stock_options());
  FileComparison c = compare_labeled(gold, hyp);
  REQUIRE(c.tokens_match);
  CHECK(c.report.accuracy == 1.0);
  CHECK(c.report.error_rate == 0.0);
  CHECK(c.report.true_pos == 2);
  CHECK(c.report.true_neg == 1);
}

TEST_CASE("compare_labeled points at the first divergent token") {
  ExtractionResult gold = extract_labels("A walk.", stock_options());
  ExtractionResult hyp = extract_labels("A ride.", stock_options());
  FileComparison c = compare_labeled(gold, hyp);
  CHECK_FALSE(c.tokens_match);
  CHECK(c.divergence.find("token 2") != std::string::npos);
  CHECK(c.divergence.find("walk") != std::string::npos);
  CHECK(c.divergence.find("ride") != std::string::npos);

  ExtractionResult longer = extract_labels("A walk. Then b", stock_options());
  FileComparison length = compare_labeled(gold, longer);
  CHECK_FALSE(length.tokens_match);
  CHECK(length.divergence.find("3 tokens") != std::string::npos);
  CHECK(length.divergence.find("5") != std::string::npos);
}

}  // TEST_SUITE("evaluation")
