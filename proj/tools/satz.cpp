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
// satz: trainable sentence-boundary disambiguation.
//
// One binary with subcommands (train, label, eval, sweep, stats, inspect,
// fold, gen); the historical tool names trainnet, bound and getfreqs are
// kept as aliases. Exit codes: 0 success, 1 usage error, 2 data or format
// error, 3 training failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "satz/corpus_gen.hpp"
#include "satz/descriptor.hpp"
#include "satz/error.hpp"
#include "satz/evaluation.hpp"
#include "satz/lexicon.hpp"
#include "satz/network.hpp"
#include "satz/segmenter.hpp"
#include "satz/token.hpp"

#ifndef SATZ_DEFAULT_DATA_DIR
#define SATZ_DEFAULT_DATA_DIR "data"
#endif

namespace {

using namespace satz;

// Options shared by the pipeline subcommands; defaults are the
// configuration that evaluates best (k=6 context tokens, j=2 hidden
// units, t0=t1=0.5).
struct RunConfig {
  std::string lexicon_dir = std::string(SATZ_DEFAULT_DATA_DIR) + "/lexicon";
  std::string mapping_path = std::string(SATZ_DEFAULT_DATA_DIR) + "/trans.tab";
  std::string weights_path = "weights.net";
  std::string sentinel = "</s>";
  std::string ambiguous_marker = "<A>";
  std::size_t context = 6;
  std::size_t hidden = 2;
  double eta = 0.1;
  std::uint64_t seed = 0;
  double t0 = 0.5;
  double t1 = 0.5;
  std::size_t max_epochs = 5000;
  std::size_t patience = 50;
  std::size_t min_epochs = 20;
  double init_range = 0.5;
  bool shuffle = false;
  double np_unknown = 0.9;
  double np_known = 0.5;
  std::string flag18 = "candidate";

  HeuristicParams heuristics() const {
    HeuristicParams params;
    params.proper_noun_unknown_freq_fraction = np_unknown;
    params.proper_noun_known_freq_fraction = np_known;
    return params;
  }

  CapFlagMode flag_mode() const {
    if (flag18 == "punct") return CapFlagMode::AfterPunct;
    return CapFlagMode::AfterCandidate;
  }

  Thresholds thresholds() const { return Thresholds(t0, t1); }

  TrainConfig train_config() const {
    TrainConfig config;
    config.eta = eta;
    config.max_epochs = max_epochs;
    config.patience = patience;
    config.min_epochs = min_epochs;
    config.seed = seed;
    config.init_range = init_range;
    config.shuffle = shuffle;
    return config;
  }
};

// Loaded lexicon + mapping, bundled with the descriptor context that
// points into them.
struct Pipeline {
  Lexicon lexicon;
  CategoryMapping mapping;
  HeuristicParams params;
  CapFlagMode flag_mode = CapFlagMode::AfterCandidate;

  DescriptorContext context() const {
    DescriptorContext ctx;
    ctx.lexicon = &lexicon;
    ctx.mapping = &mapping;
    ctx.params = params;
    ctx.flag_mode = flag_mode;
    return ctx;
  }
};

Pipeline load_pipeline(const RunConfig& cfg) {
  Pipeline p;
  p.lexicon = Lexicon::load_dir(cfg.lexicon_dir);
  p.mapping = CategoryMapping::load(cfg.mapping_path);
  p.params = cfg.heuristics();
  p.flag_mode = cfg.flag_mode();
  return p;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return std::move(buffer).str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

std::string format_double(double value, const char* format = "%.6g") {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, value);
  return buffer;
}

// Attaches the shared pipeline flags to one subcommand.
void add_pipeline_flags(CLI::App* cmd, RunConfig& cfg, bool with_network) {
  cmd->add_option("--lexicon-dir", cfg.lexicon_dir,
                  "Directory with words/abbrev/chars/endings/propnoun .dict")
      ->capture_default_str();
  cmd->add_option("--mapping", cfg.mapping_path,
                  "Tag-to-category table (trans.tab)")
      ->capture_default_str();
  cmd->add_option("--sentinel", cfg.sentinel, "Boundary sentinel token")
      ->capture_default_str();
  cmd->add_option("--np-unknown", cfg.np_unknown,
                  "Proper-noun frequency share for unknown capitalized words")
      ->capture_default_str();
  cmd->add_option("--np-known", cfg.np_known,
                  "Proper-noun share mixed into known capitalized words")
      ->capture_default_str();
  cmd->add_option("--flag18", cfg.flag18,
                  "Second capitalization flag trigger: candidate|punct")
      ->check(CLI::IsMember({"candidate", "punct"}))
      ->capture_default_str();
  if (with_network) {
    cmd->add_option("-k,--context", cfg.context,
                    "Context tokens around each candidate (even)")
        ->capture_default_str();
    cmd->add_option("-j,--hidden", cfg.hidden, "Hidden units")
        ->capture_default_str();
  }
}

std::string unmapped_note(const UnmappedTagLog& log) {
  std::ostringstream out;
  out << "tags without a category (counted in slot 0):";
  for (const auto& [tag, count] : log.counts) {
    out << " " << tag << "x" << count;
  }
  return std::move(out).str();
}

void report_table(std::ostream& out, const EvalReport& r) {
  out << "cases   TP      TN      FP      FN      not_lab correct\n";
  char line[160];
  std::snprintf(line, sizeof line,
                "%-7zu %-7zu %-7zu %-7zu %-7zu %-7zu %-7zu\n", r.total_cases,
                r.true_pos, r.true_neg, r.false_pos, r.false_neg,
                r.not_labeled, r.were_correct);
  out << line;
}

void report_dump(std::ostream& out, const EvalReport& r) {
  out << "total=" << r.total_cases << "\n"
      << "tp=" << r.true_pos << "\n"
      << "tn=" << r.true_neg << "\n"
      << "fp=" << r.false_pos << "\n"
      << "fn=" << r.false_neg << "\n"
      << "not_labeled=" << r.not_labeled << "\n"
      << "were_correct=" << r.were_correct << "\n"
      << "lower_bound=" << format_double(r.lower_bound, "%.17g") << "\n"
      << "accuracy=" << format_double(r.accuracy, "%.17g") << "\n"
      << "error_rate=" << format_double(r.error_rate, "%.17g") << "\n";
}

// Approximate taxonomy of the mislabeled / unlabeled sites.
void report_error_classes(std::ostream& out, const std::vector<Token>& tokens,
                          const std::vector<LabeledCase>& cases,
                          const std::vector<double>& scores,
                          const Thresholds& thresholds) {
  std::size_t counts[4] = {0, 0, 0, 0};
  std::size_t wrong = 0;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    Decision d = classify(scores[i], thresholds);
    bool correct = (d == Decision::Boundary && cases[i].label == 1) ||
                   (d == Decision::NotBoundary && cases[i].label == 0);
    if (correct) continue;
    ++wrong;
    ++counts[static_cast<int>(classify_error_site(tokens, cases[i].site))];
  }
  out << "error classes (approximate; errors + unlabeled = " << wrong
      << "):\n";
  for (int c = 0; c < 4; ++c) {
    out << "  " << error_class_name(static_cast<ErrorClass>(c)) << "="
        << counts[c] << "\n";
  }
}

int cmd_train(const RunConfig& cfg, const std::string& training_path,
              const std::string& cross_path, const std::string& out_path) {
  Pipeline pipeline = load_pipeline(cfg);
  DescriptorContext ctx = pipeline.context();
  TokenizerOptions options = pipeline.lexicon.tokenizer_options(cfg.sentinel);

  ExtractionResult training = extract_labels(read_file(training_path), options);
  ExtractionResult cross = extract_labels(read_file(cross_path), options);
  print_warnings(training.warnings);
  print_warnings(cross.warnings);

  UnmappedTagLog log;
  std::vector<TrainingExample> train_set =
      make_training_set(training, cfg.context, ctx, &log);
  std::vector<TrainingExample> cross_set =
      make_training_set(cross, cfg.context, ctx, &log);
  if (!log.empty()) std::cerr << "warning: " << unmapped_note(log) << "\n";

  Network net = init_network(cfg.context, cfg.hidden, cfg.seed,
                             cfg.init_range);
  TrainingReport report = train(net, train_set, cross_set,
                                cfg.train_config());
  save_weights(net, out_path);

  std::cout << "k       j       epochs  best    train_err       cross_err\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-7zu %-7zu %-7zu %-7zu %-15.6f %-15.6f\n",
                cfg.context, cfg.hidden, report.epochs, report.best_epoch,
                report.training_error, report.cross_error);
  std::cout << line;
  std::cout << "training_cases=" << train_set.size() << "\n"
            << "cross_cases=" << cross_set.size() << "\n"
            << "weights=" << out_path << "\n";
  return 0;
}

// Loads the weights and reconciles the file's context size with the flag:
// an unset flag adopts the file's k, an explicit mismatch is an error.
Network load_checked_weights(const RunConfig& cfg, bool context_explicit) {
  Network net = load_weights(cfg.weights_path);
  if (context_explicit && net.context_size != cfg.context) {
    throw FormatError("weights file " + cfg.weights_path + " has k=" +
                      std::to_string(net.context_size) +
                      " but --context requested " +
                      std::to_string(cfg.context));
  }
  return net;
}

int cmd_label(const RunConfig& cfg, bool context_explicit,
              const std::string& input_path, std::string out_path) {
  namespace fs = std::filesystem;
  if (out_path.empty()) out_path = input_path + ".bound";
  std::error_code ec;
  if (fs::exists(out_path) && fs::equivalent(input_path, out_path, ec)) {
    throw ArgumentError("refusing to overwrite input file " + input_path);
  }

  Pipeline pipeline = load_pipeline(cfg);
  Network net = load_checked_weights(cfg, context_explicit);

  LabelOptions label_options;
  label_options.sentinel = cfg.sentinel;
  label_options.ambiguous_marker = cfg.ambiguous_marker;
  LabelResult result = label_text(read_file(input_path), net,
                                  cfg.thresholds(), pipeline.context(),
                                  label_options);
  write_file(out_path, result.text);

  std::size_t boundaries = 0;
  std::size_t ambiguous = 0;
  for (const auto& d : result.decisions) {
    if (d.decision == Decision::Boundary) ++boundaries;
    if (d.decision == Decision::Ambiguous) ++ambiguous;
  }
  std::cout << "candidates=" << result.decisions.size() << "\n"
            << "boundaries=" << boundaries << "\n"
            << "ambiguous=" << ambiguous << "\n"
            << "out=" << out_path << "\n";
  return 0;
}

int cmd_eval(const RunConfig& cfg, bool context_explicit,
             const std::string& gold_path, const std::string& hyp_path) {
  Pipeline pipeline = load_pipeline(cfg);
  DescriptorContext ctx = pipeline.context();
  TokenizerOptions options = pipeline.lexicon.tokenizer_options(cfg.sentinel);

  std::string gold_text = read_file(gold_path);
  ExtractionResult gold = extract_labels(gold_text, options);
  print_warnings(gold.warnings);

  EvalReport report;
  std::vector<double> scores;
  Thresholds thresholds = cfg.thresholds();
  if (!hyp_path.empty()) {
    // File-vs-file mode: the hypothesis labeling is compared as if its
    // sentinels were hard 0/1 scores.
    std::string hyp_text =
        strip_markers(read_file(hyp_path), cfg.ambiguous_marker);
    ExtractionResult hyp = extract_labels(hyp_text, options);
    FileComparison comparison = compare_labeled(gold, hyp);
    if (!comparison.tokens_match) {
      throw FormatError("token streams diverge: " + comparison.divergence);
    }
    report = comparison.report;
    scores.reserve(hyp.cases.size());
    for (const auto& c : hyp.cases) scores.push_back(c.label ? 1.0 : 0.0);
    thresholds = Thresholds(0.5, 0.5);
  } else {
    Network net = load_checked_weights(cfg, context_explicit);
    std::vector<SiteDecision> decisions =
        score_cases(gold.tokens, gold.cases, net, thresholds, ctx);
    scores.reserve(decisions.size());
    for (const auto& d : decisions) scores.push_back(d.score);
    std::vector<int> labels;
    labels.reserve(gold.cases.size());
    for (const auto& c : gold.cases) labels.push_back(c.label);
    report = evaluate(scores, labels, thresholds);
  }

  report_table(std::cout, report);
  report_dump(std::cout, report);
  report_error_classes(std::cout, gold.tokens, gold.cases, scores,
                       thresholds);
  return 0;
}

std::vector<std::pair<double, double>> parse_pairs(const std::string& text) {
  std::vector<std::pair<double, double>> pairs;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw ArgumentError("threshold pair '" + item +
                          "' is not of the form t0:t1");
    }
    try {
      pairs.emplace_back(std::stod(item.substr(0, colon)),
                         std::stod(item.substr(colon + 1)));
    } catch (const std::exception&) {
      throw ArgumentError("threshold pair '" + item + "' is not numeric");
    }
  }
  if (pairs.empty()) throw ArgumentError("no threshold pairs given");
  return pairs;
}

int cmd_sweep(const RunConfig& cfg, bool context_explicit,
              const std::string& gold_path, const std::string& pairs_text) {
  Pipeline pipeline = load_pipeline(cfg);
  TokenizerOptions options = pipeline.lexicon.tokenizer_options(cfg.sentinel);

  ExtractionResult gold = extract_labels(read_file(gold_path), options);
  print_warnings(gold.warnings);
  Network net = load_checked_weights(cfg, context_explicit);

  DescriptorContext ctx = pipeline.context();
  std::vector<SiteDecision> decisions =
      score_cases(gold.tokens, gold.cases, net, Thresholds(0.5, 0.5), ctx);
  std::vector<double> scores;
  std::vector<int> labels;
  scores.reserve(decisions.size());
  labels.reserve(gold.cases.size());
  for (const auto& d : decisions) scores.push_back(d.score);
  for (const auto& c : gold.cases) labels.push_back(c.label);

  std::vector<std::pair<double, double>> pairs =
      pairs_text.empty() ? std::vector<std::pair<double, double>>{{0.5, 0.5},
                                                                  {0.4, 0.6},
                                                                  {0.3, 0.7},
                                                                  {0.2, 0.8},
                                                                  {0.1, 0.9}}
                         : parse_pairs(pairs_text);
  std::vector<SweepRow> rows = sweep_thresholds(scores, labels, pairs);

  std::cout << "t0\tt1\tfp\tfn\tnot_labeled\twere_correct\terror_rate\n";
  for (const auto& row : rows) {
    std::cout << format_double(row.thresholds.t0, "%.3g") << "\t"
              << format_double(row.thresholds.t1, "%.3g") << "\t"
              << row.report.false_pos << "\t" << row.report.false_neg << "\t"
              << row.report.not_labeled << "\t" << row.report.were_correct
              << "\t" << format_double(row.report.error_rate, "%.6g") << "\n";
  }
  return 0;
}

int cmd_stats(const RunConfig& cfg, const std::string& input_path) {
  Pipeline pipeline = load_pipeline(cfg);
  TokenizerOptions options = pipeline.lexicon.tokenizer_options(cfg.sentinel);
  ExtractionResult extraction =
      extract_labels(read_file(input_path), options);
  print_warnings(extraction.warnings);
  CorpusStats stats = corpus_stats(extraction);
  std::cout << "tokens=" << stats.tokens << "\n"
            << "candidates=" << stats.candidates << "\n"
            << "boundaries=" << stats.boundaries << "\n"
            << "warnings=" << stats.warnings << "\n"
            << "lower_bound=" << format_double(stats.lower_bound, "%.17g")
            << "\n";
  return 0;
}

int cmd_inspect(const RunConfig& cfg, const std::string& input_path) {
  Pipeline pipeline = load_pipeline(cfg);
  DescriptorContext ctx = pipeline.context();
  TokenizerOptions options = pipeline.lexicon.tokenizer_options(cfg.sentinel);
  ExtractionResult extraction =
      extract_labels(read_file(input_path), options);
  print_warnings(extraction.warnings);

  UnmappedTagLog log;
  const std::vector<Token>& tokens = extraction.tokens;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    TagFrequencies tags = pipeline.lexicon.lookup(tokens[i], ctx.params);
    bool prev_triggers = false;
    if (i > 0) {
      prev_triggers = ctx.flag_mode == CapFlagMode::AfterPunct
                          ? tokens[i - 1].kind == TokenKind::Punct ||
                                is_candidate_token(tokens[i - 1])
                          : is_candidate_token(tokens[i - 1]);
    }
    DescriptorArray d = build_descriptor(tokens[i], tags, pipeline.mapping,
                                         prev_triggers, &log);
    std::cout << tokens[i].text << "\t";
    bool first = true;
    for (const auto& [tag, freq] : tags.entries) {
      if (!first) std::cout << " ";
      std::cout << tag << "/" << format_double(freq, "%.6g");
      first = false;
    }
    std::cout << "\t";
    for (std::size_t s = 0; s < d.size(); ++s) {
      if (s) std::cout << " ";
      std::cout << format_double(d[s], "%.6g");
    }
    std::cout << "\n";
  }
  if (!log.empty()) std::cerr << "warning: " << unmapped_note(log) << "\n";
  return 0;
}

int cmd_fold(const std::string& input_path, const std::string& mode,
             const std::string& out_path) {
  if (out_path == input_path) {
    throw ArgumentError("refusing to overwrite input file " + input_path);
  }
  CaseMode case_mode = mode == "upper" ? CaseMode::Upper : CaseMode::Lower;
  std::string folded = case_fold(read_file(input_path), case_mode);
  if (out_path.empty()) {
    std::cout << folded;
  } else {
    write_file(out_path, folded);
  }
  return 0;
}

struct GenFlags {
  GeneratorSpec spec;
  std::string out_path;
};

int cmd_gen(const GenFlags& flags) {
  GeneratedCorpus corpus = generate_corpus(flags.spec);
  if (flags.out_path.empty()) {
    std::cout << corpus.text;
  } else {
    write_file(flags.out_path, corpus.text);
    std::cout << "sentences=" << corpus.sentences << "\n"
              << "candidates=" << corpus.candidates << "\n"
              << "boundaries=" << corpus.boundaries << "\n"
              << "lower_bound=" << format_double(corpus.lower_bound, "%.17g")
              << "\n"
              << "titled_names=" << corpus.titled_names << "\n"
              << "mid_ellipses=" << corpus.mid_ellipses << "\n"
              << "mid_quotes=" << corpus.mid_quotes << "\n"
              << "decimals=" << corpus.decimals << "\n"
              << "out=" << flags.out_path << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"satz: trainable sentence-boundary disambiguation"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "Read defaults from a key=value config file");
  app.get_config_ptr()->configurable(false);

  RunConfig cfg;

  // train TRAIN CROSS
  auto* train_cmd =
      app.add_subcommand("train", "Train a network on annotated text");
  train_cmd->alias("trainnet");
  std::string training_path, cross_path;
  train_cmd->add_option("training", training_path, "Annotated training text")
      ->required();
  train_cmd->add_option("cross", cross_path, "Annotated cross-validation text")
      ->required();
  add_pipeline_flags(train_cmd, cfg, true);
  train_cmd->add_option("--eta", cfg.eta, "Learning rate")
      ->capture_default_str();
  train_cmd->add_option("--seed", cfg.seed, "Random seed")
      ->capture_default_str();
  train_cmd->add_option("--max-epochs", cfg.max_epochs, "Epoch cap")
      ->capture_default_str();
  train_cmd->add_option("--patience", cfg.patience,
                        "Epochs without cross improvement before stopping")
      ->capture_default_str();
  train_cmd->add_option("--min-epochs", cfg.min_epochs,
                        "Minimum epochs before early stopping")
      ->capture_default_str();
  train_cmd->add_option("--init-range", cfg.init_range,
                        "Initial weight half-width")
      ->capture_default_str();
  train_cmd->add_flag("--shuffle", cfg.shuffle,
                      "Shuffle training order each epoch");
  train_cmd
      ->add_option("-w,--weights,--out", cfg.weights_path,
                   "Where to write the trained weights")
      ->capture_default_str();

  // label INPUT
  auto* label_cmd =
      app.add_subcommand("label", "Insert boundary sentinels into a text");
  label_cmd->alias("bound");
  std::string label_input, label_out;
  label_cmd->add_option("input", label_input, "Plain text to label")
      ->required();
  add_pipeline_flags(label_cmd, cfg, true);
  label_cmd->add_option("-w,--weights", cfg.weights_path, "Trained weights")
      ->capture_default_str();
  label_cmd->add_option("-o,--out", label_out,
                        "Output path (default: INPUT.bound)");
  label_cmd->add_option("--t0", cfg.t0, "Lower sensitivity threshold")
      ->capture_default_str();
  label_cmd->add_option("--t1", cfg.t1, "Upper sensitivity threshold")
      ->capture_default_str();
  label_cmd
      ->add_option("--ambiguous-marker", cfg.ambiguous_marker,
                   "Marker for unlabeled candidates")
      ->capture_default_str();

  // eval GOLD [--hyp LABELED | --weights NET]
  auto* eval_cmd =
      app.add_subcommand("eval", "Score labeling against gold annotation");
  std::string gold_path, hyp_path;
  eval_cmd->add_option("gold", gold_path, "Gold annotated text")->required();
  eval_cmd->add_option("--hyp", hyp_path,
                       "Labeled text to check (default: run the network)");
  add_pipeline_flags(eval_cmd, cfg, true);
  eval_cmd->add_option("-w,--weights", cfg.weights_path, "Trained weights")
      ->capture_default_str();
  eval_cmd->add_option("--t0", cfg.t0, "Lower sensitivity threshold")
      ->capture_default_str();
  eval_cmd->add_option("--t1", cfg.t1, "Upper sensitivity threshold")
      ->capture_default_str();
  eval_cmd
      ->add_option("--ambiguous-marker", cfg.ambiguous_marker,
                   "Marker stripped from hypothesis text")
      ->capture_default_str();

  // sweep GOLD
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Re-threshold cached scores over (t0,t1) pairs");
  std::string sweep_gold, sweep_pairs;
  sweep_cmd->add_option("gold", sweep_gold, "Gold annotated text")->required();
  sweep_cmd->add_option("--pairs", sweep_pairs,
                        "Comma list of t0:t1 (default: the stock five)");
  add_pipeline_flags(sweep_cmd, cfg, true);
  sweep_cmd->add_option("-w,--weights", cfg.weights_path, "Trained weights")
      ->capture_default_str();

  // stats INPUT
  auto* stats_cmd =
      app.add_subcommand("stats", "Candidate/boundary counts for a corpus");
  std::string stats_input;
  stats_cmd->add_option("input", stats_input, "Annotated text")->required();
  add_pipeline_flags(stats_cmd, cfg, false);

  // inspect INPUT
  auto* inspect_cmd = app.add_subcommand(
      "inspect", "Dump per-token tags and descriptor values");
  inspect_cmd->alias("getfreqs");
  std::string inspect_input;
  inspect_cmd->add_option("input", inspect_input, "Text to inspect")
      ->required();
  add_pipeline_flags(inspect_cmd, cfg, false);

  // fold INPUT
  auto* fold_cmd =
      app.add_subcommand("fold", "Convert a text to single-case format");
  std::string fold_input, fold_mode = "lower", fold_out;
  fold_cmd->add_option("input", fold_input, "Text to convert")->required();
  fold_cmd->add_option("--mode", fold_mode, "lower or upper")
      ->check(CLI::IsMember({"lower", "upper"}))
      ->capture_default_str();
  fold_cmd->add_option("-o,--out", fold_out, "Output path (default: stdout)");

  // gen
  auto* gen_cmd =
      app.add_subcommand("gen", "Generate a synthetic annotated corpus");
  GenFlags gen;
  gen_cmd->add_option("-o,--out", gen.out_path,
                      "Output path (default: stdout, no report)");
  gen_cmd->add_option("--sentences", gen.spec.sentences, "Sentence count")
      ->capture_default_str();
  gen_cmd->add_option("--seed", gen.spec.seed, "Random seed")
      ->capture_default_str();
  gen_cmd->add_option("--sentinel", gen.spec.sentinel, "Boundary sentinel")
      ->capture_default_str();
  gen_cmd
      ->add_option("--titled-rate", gen.spec.titled_name_rate,
                   "Titled-name rate (Dr. Watson)")
      ->capture_default_str();
  gen_cmd
      ->add_option("--mid-ellipsis-rate", gen.spec.mid_ellipsis_rate,
                   "Mid-sentence ellipsis rate")
      ->capture_default_str();
  gen_cmd
      ->add_option("--mid-quote-rate", gen.spec.mid_quote_rate,
                   "Mid-sentence quoted exclamation rate")
      ->capture_default_str();
  gen_cmd->add_option("--decimal-rate", gen.spec.decimal_rate,
                      "Decimal-number rate")
      ->capture_default_str();
  gen_cmd
      ->add_option("--eos-abbrev-rate", gen.spec.eos_abbrev_rate,
                   "Sentence-final abbreviation rate")
      ->capture_default_str();
  gen_cmd->add_option("--quote-eos-rate", gen.spec.quote_eos_rate,
                      "Quoted sentence-end rate")
      ->capture_default_str();
  gen_cmd
      ->add_option("--ellipsis-eos-rate", gen.spec.ellipsis_eos_rate,
                   "Sentence-final ellipsis rate")
      ->capture_default_str();
  gen_cmd
      ->add_option("--question-rate", gen.spec.question_eos_rate,
                   "Question-sentence rate")
      ->capture_default_str();
  gen_cmd
      ->add_option("--max-extra-phrases", gen.spec.max_extra_phrases,
                   "Maximum trailing prepositional phrases")
      ->capture_default_str();

  try {
    app.parse(argc, argv);

    if (app.got_subcommand(train_cmd)) {
      return cmd_train(cfg, training_path, cross_path, cfg.weights_path);
    }
    if (app.got_subcommand(label_cmd)) {
      bool explicit_k = label_cmd->count("--context") > 0;
      return cmd_label(cfg, explicit_k, label_input, label_out);
    }
    if (app.got_subcommand(eval_cmd)) {
      bool explicit_k = eval_cmd->count("--context") > 0;
      return cmd_eval(cfg, explicit_k, gold_path, hyp_path);
    }
    if (app.got_subcommand(sweep_cmd)) {
      bool explicit_k = sweep_cmd->count("--context") > 0;
      return cmd_sweep(cfg, explicit_k, sweep_gold, sweep_pairs);
    }
    if (app.got_subcommand(stats_cmd)) return cmd_stats(cfg, stats_input);
    if (app.got_subcommand(inspect_cmd)) {
      return cmd_inspect(cfg, inspect_input);
    }
    if (app.got_subcommand(fold_cmd)) {
      return cmd_fold(fold_input, fold_mode, fold_out);
    }
    if (app.got_subcommand(gen_cmd)) return cmd_gen(gen);
    std::cerr << "error: no subcommand given\n";
    return 1;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const TrainingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DecodeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const satz::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
