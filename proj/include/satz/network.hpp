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
#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

namespace satz {

// Fully connected feed-forward scorer: context_size * 20 inputs, one
// sigmoid hidden layer, one sigmoid output giving the boundary score.
struct Network {
  std::size_t context_size = 0;  // tokens in the context window (even)
  std::size_t hidden_units = 0;
  std::vector<double> w_ih;  // input->hidden, row-major [input * hidden + h]
  std::vector<double> b_h;   // hidden biases
  std::vector<double> w_ho;  // hidden->output
  double b_o = 0.0;          // output bias

  std::size_t input_size() const;

  bool operator==(const Network&) const = default;
};

// Weights drawn uniformly from [-init_range, init_range] with a fixed
// deterministic generator; draw order is w_ih, b_h, w_ho, b_o.
Network init_network(std::size_t context_size, std::size_t hidden_units,
                     std::uint64_t seed, double init_range = 0.5);

double sigmoid(double x);

// Boundary score in (0, 1) for one assembled input vector.
double forward(const Network& net, const std::vector<double>& input);

// Partial derivatives of E = 1/2 (target - output)^2 with respect to every
// weight, laid out exactly like the Network fields.
struct Gradient {
  std::vector<double> w_ih;
  std::vector<double> b_h;
  std::vector<double> w_ho;
  double b_o = 0.0;
};

Gradient gradient(const Network& net, const std::vector<double>& input,
                  double target);

struct TrainingExample {
  std::vector<double> input;
  double target = 0.0;  // 0 or 1
};

struct TrainConfig {
  double eta = 0.1;              // learning rate
  std::size_t max_epochs = 5000;
  std::size_t patience = 50;     // epochs without cross-error improvement
  std::size_t min_epochs = 20;   // never stop earlier than this
  std::uint64_t seed = 0;        // drives example shuffling
  double init_range = 0.5;       // weight init half-width (for callers)
  bool shuffle = false;
};

struct TrainingReport {
  std::size_t epochs = 0;      // epochs actually run
  std::size_t best_epoch = 0;  // 1-based epoch of the kept weights
  double training_error = 0.0;
  double cross_error = 0.0;
  // (training error, cross error) after each epoch.
  std::vector<std::pair<double, double>> error_curve;
};

// Online back-propagation: weights update after every example. After each
// epoch both sets are scored; the weights with the lowest cross-validation
// error are kept. When `cross` is empty the training set doubles as the
// stopping signal.
TrainingReport train(Network& net,
                     const std::vector<TrainingExample>& training,
                     const std::vector<TrainingExample>& cross,
                     const TrainConfig& config);

// Summed squared error, 1/2 sum (target - output)^2, over a whole set.
double dataset_error(const Network& net,
                     const std::vector<TrainingExample>& examples);

// Plain-text weights file; values are printed with enough digits that a
// save/load round trip is bit-exact.
void save_weights(const Network& net, const std::filesystem::path& path);
Network load_weights(const std::filesystem::path& path);

}  // namespace satz
