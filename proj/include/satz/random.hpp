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

#include <cstdint>
#include <random>

// Deterministic draws built directly on the mt19937_64 bit stream. The
// standard <random> distributions are implementation-defined, which would
// make seeded runs differ between standard libraries.

namespace satz::rng {

// Uniform in [0, 1) with 53 random bits.
inline double unit_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform index in [0, n); n must be positive.
inline std::size_t bounded(std::mt19937_64& gen, std::size_t n) {
  return static_cast<std::size_t>(
      (static_cast<unsigned __int128>(gen()) * n) >> 64);
}

inline bool bernoulli(std::mt19937_64& gen, double p) {
  return unit_uniform(gen) < p;
}

}  // namespace satz::rng
