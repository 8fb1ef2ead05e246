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

#include "satz/network.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "satz/descriptor.hpp"
#include "satz/error.hpp"
#include "satz/random.hpp"

namespace satz {

namespace {

void shuffle_order(std::vector<std::size_t>& order, std::mt19937_64& gen) {
  for (std::size_t i = order.size(); i > 1; --i)
    std::swap(order[i - 1], order[rng::bounded(gen, i)]);
}

void check_dimensions(std::size_t context_size, std::size_t hidden_units) {
  if (context_size == 0 || context_size % 2 != 0)
    throw ArgumentError("context size must be a positive even number");
  if (hidden_units == 0)
    throw ArgumentError("hidden unit count must be positive");
}

void check_input(const Network& net, const std::vector<double>& input) {
  if (input.size() != net.input_size())
    throw ArgumentError("input has " + std::to_string(input.size()) +
                        " values, network expects " +
                        std::to_string(net.input_size()));
}

void forward_hidden(const Network& net, const std::vector<double>& input,
                    std::vector<double>& hidden) {
  const std::size_t j = net.hidden_units;
  hidden.assign(j, 0.0);
  for (std::size_t i = 0; i < input.size(); ++i) {
    const double x = input[i];
    if (x == 0.0) continue;
    const double* row = net.w_ih.data() + i * j;
    for (std::size_t h = 0; h < j; ++h) hidden[h] += x * row[h];
  }
  for (std::size_t h = 0; h < j; ++h) hidden[h] = sigmoid(hidden[h] + net.b_h[h]);
}

double output_from_hidden(const Network& net,
                          const std::vector<double>& hidden) {
  double sum = net.b_o;
  for (std::size_t h = 0; h < net.hidden_units; ++h)
    sum += net.w_ho[h] * hidden[h];
  return sigmoid(sum);
}

// One online update; hidden is scratch space reused across calls.
void apply_update(Network& net, const TrainingExample& example, double eta,
                  std::vector<double>& hidden) {
  forward_hidden(net, example.input, hidden);
  const double o = output_from_hidden(net, hidden);
  const double delta_o = (o - example.target) * o * (1.0 - o);
  const std::size_t j = net.hidden_units;
  for (std::size_t h = 0; h < j; ++h) {
    // Uses the pre-update hidden->output weight.
    const double delta_h =
        delta_o * net.w_ho[h] * hidden[h] * (1.0 - hidden[h]);
    if (delta_h != 0.0) {
      for (std::size_t i = 0; i < example.input.size(); ++i) {
        const double x = example.input[i];
        if (x != 0.0) net.w_ih[i * j + h] -= eta * delta_h * x;
      }
      net.b_h[h] -= eta * delta_h;
    }
    net.w_ho[h] -= eta * delta_o * hidden[h];
  }
  net.b_o -= eta * delta_o;
}

void check_examples(const Network& net,
                    const std::vector<TrainingExample>& examples,
                    const char* which) {
  for (const auto& example : examples) {
    if (example.input.size() != net.input_size())
      throw ArgumentError(std::string(which) +
                          " example input size does not match the network");
    if (example.target != 0.0 && example.target != 1.0)
      throw ArgumentError(std::string(which) +
                          " example target must be 0 or 1");
  }
}

std::string format_value(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

double parse_value(const std::string& field, const std::string& file,
                   std::size_t line) {
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError(file, line, "bad weight value '" + field + "'");
  return value;
}

std::vector<double> parse_row(const std::string& line, const std::string& file,
                              std::size_t line_no) {
  std::vector<double> values;
  std::size_t start = 0;
  while (start < line.size()) {
    std::size_t end = line.find(' ', start);
    if (end == std::string::npos) end = line.size();
    if (end > start)
      values.push_back(parse_value(line.substr(start, end - start), file,
                                   line_no));
    start = end + 1;
  }
  return values;
}

}  // namespace

std::size_t Network::input_size() const {
  return context_size * kDescriptorSize;
}

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

Network init_network(std::size_t context_size, std::size_t hidden_units,
                     std::uint64_t seed, double init_range) {
  check_dimensions(context_size, hidden_units);
  if (!(init_range > 0.0) || !std::isfinite(init_range))
    throw ArgumentError("init range must be positive and finite");

  Network net;
  net.context_size = context_size;
  net.hidden_units = hidden_units;
  net.w_ih.resize(net.input_size() * hidden_units);
  net.b_h.resize(hidden_units);
  net.w_ho.resize(hidden_units);

  std::mt19937_64 gen(seed);
  const auto draw = [&]() {
    return (2.0 * rng::unit_uniform(gen) - 1.0) * init_range;
  };
  for (auto& w : net.w_ih) w = draw();
  for (auto& w : net.b_h) w = draw();
  for (auto& w : net.w_ho) w = draw();
  net.b_o = draw();
  return net;
}

double forward(const Network& net, const std::vector<double>& input) {
  check_input(net, input);
  std::vector<double> hidden;
  forward_hidden(net, input, hidden);
  return output_from_hidden(net, hidden);
}

Gradient gradient(const Network& net, const std::vector<double>& input,
                  double target) {
  check_input(net, input);
  std::vector<double> hidden;
  forward_hidden(net, input, hidden);
  const double o = output_from_hidden(net, hidden);
  const double delta_o = (o - target) * o * (1.0 - o);

  Gradient grad;
  const std::size_t j = net.hidden_units;
  grad.w_ih.assign(net.w_ih.size(), 0.0);
  grad.b_h.assign(j, 0.0);
  grad.w_ho.assign(j, 0.0);
  grad.b_o = delta_o;
  for (std::size_t h = 0; h < j; ++h) {
    grad.w_ho[h] = delta_o * hidden[h];
    const double delta_h =
        delta_o * net.w_ho[h] * hidden[h] * (1.0 - hidden[h]);
    grad.b_h[h] = delta_h;
    for (std::size_t i = 0; i < input.size(); ++i)
      grad.w_ih[i * j + h] = delta_h * input[i];
  }
  return grad;
}

double dataset_error(const Network& net,
                     const std::vector<TrainingExample>& examples) {
  double sum = 0.0;
  std::vector<double> hidden;
  for (const auto& example : examples) {
    check_input(net, example.input);
    forward_hidden(net, example.input, hidden);
    const double diff = example.target - output_from_hidden(net, hidden);
    sum += 0.5 * diff * diff;
  }
  return sum;
}

TrainingReport train(Network& net,
                     const std::vector<TrainingExample>& training,
                     const std::vector<TrainingExample>& cross,
                     const TrainConfig& config) {
  check_dimensions(net.context_size, net.hidden_units);
  if (training.empty()) throw ArgumentError("training set is empty");
  if (!(config.eta > 0.0) || !std::isfinite(config.eta))
    throw ArgumentError("learning rate must be positive and finite");
  if (config.max_epochs == 0)
    throw ArgumentError("epoch limit must be positive");
  check_examples(net, training, "training");
  check_examples(net, cross, "cross-validation");
  const std::vector<TrainingExample>& val = cross.empty() ? training : cross;

  std::mt19937_64 gen(config.seed);
  std::vector<std::size_t> order(training.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<double> hidden;

  TrainingReport report;
  Network best = net;
  double best_cross = std::numeric_limits<double>::infinity();
  double best_train = best_cross;
  std::size_t since_best = 0;

  std::size_t epoch = 0;
  while (epoch < config.max_epochs) {
    ++epoch;
    if (config.shuffle) shuffle_order(order, gen);
    for (const std::size_t idx : order)
      apply_update(net, training[idx], config.eta, hidden);

    const double train_err = dataset_error(net, training);
    const double cross_err =
        (&val == &training) ? train_err : dataset_error(net, val);
    report.error_curve.emplace_back(train_err, cross_err);
    if (!std::isfinite(train_err) || !std::isfinite(cross_err))
      throw TrainingError("training diverged", epoch);

    if (cross_err < best_cross) {
      best = net;
      best_cross = cross_err;
      best_train = train_err;
      report.best_epoch = epoch;
      since_best = 0;
    } else {
      ++since_best;
    }
    if (epoch >= config.min_epochs && since_best >= config.patience) break;
  }

  net = best;
  report.epochs = epoch;
  report.training_error = best_train;
  report.cross_error = best_cross;
  return report;
}

void save_weights(const Network& net, const std::filesystem::path& path) {
  check_dimensions(net.context_size, net.hidden_units);
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");

  const std::size_t j = net.hidden_units;
  out << "SATZ-WEIGHTS v1 k=" << net.context_size << " j=" << j << "\n";
  const auto write_row = [&](const double* values, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
      if (i) out << ' ';
      out << format_value(values[i]);
    }
    out << "\n";
  };
  for (std::size_t i = 0; i < net.input_size(); ++i)
    write_row(net.w_ih.data() + i * j, j);
  write_row(net.b_h.data(), j);
  write_row(net.w_ho.data(), j);
  write_row(&net.b_o, 1);
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

Network load_weights(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open weights file " + path.string());
  const std::string file = path.string();

  std::string line;
  if (!std::getline(in, line))
    throw ParseError(file, 1, "missing header line");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  std::size_t k = 0, j = 0;
  {
    const std::string_view header = line;
    const std::string_view magic = "SATZ-WEIGHTS v1 k=";
    if (!header.starts_with(magic))
      throw ParseError(file, 1, "not a SATZ-WEIGHTS v1 file");
    const char* p = header.data() + magic.size();
    const char* end = header.data() + header.size();
    auto res = std::from_chars(p, end, k);
    if (res.ec != std::errc())
      throw ParseError(file, 1, "bad context size in header");
    p = res.ptr;
    const std::string_view sep = " j=";
    if (std::string_view(p, end - p).substr(0, sep.size()) != sep)
      throw ParseError(file, 1, "expected ' j=' in header");
    p += sep.size();
    res = std::from_chars(p, end, j);
    if (res.ec != std::errc() || res.ptr != end)
      throw ParseError(file, 1, "bad hidden unit count in header");
  }
  if (k == 0 || k % 2 != 0 || j == 0)
    throw FormatError("weights file " + file +
                      " declares invalid dimensions k=" + std::to_string(k) +
                      " j=" + std::to_string(j));

  Network net;
  net.context_size = k;
  net.hidden_units = j;
  net.w_ih.resize(net.input_size() * j);
  net.b_h.resize(j);
  net.w_ho.resize(j);

  std::size_t line_no = 1;
  const auto read_row = [&](double* values, std::size_t count) {
    if (!std::getline(in, line))
      throw FormatError("weights file " + file + " is truncated at line " +
                        std::to_string(line_no + 1));
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto row = parse_row(line, file, line_no);
    if (row.size() != count)
      throw FormatError("weights file " + file + " line " +
                        std::to_string(line_no) + ": expected " +
                        std::to_string(count) + " values, got " +
                        std::to_string(row.size()));
    for (std::size_t i = 0; i < count; ++i) values[i] = row[i];
  };
  for (std::size_t i = 0; i < net.input_size(); ++i)
    read_row(net.w_ih.data() + i * j, j);
  read_row(net.b_h.data(), j);
  read_row(net.w_ho.data(), j);
  read_row(&net.b_o, 1);

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty())
      throw FormatError("weights file " + file +
                        " has trailing content at line " +
                        std::to_string(line_no));
  }
  return net;
}

}  // namespace satz
