// Copyright (c) 2026 W2S Project Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef W2S_COMMON_RNG_H_
#define W2S_COMMON_RNG_H_

#include <cstdint>
#include <string>

namespace w2s {

// Deterministic generator with self-contained distributions so that results
// do not depend on the standard library implementation. splitmix64 core.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t NextU64();
  // Uniform in [0, 1).
  double Uniform();
  // Uniform in [lo, hi).
  double Uniform(double lo, double hi);
  // Integer in [0, n), n > 0.
  int64_t UniformInt(int64_t n);
  // Standard normal via Box-Muller.
  double Gaussian();

 private:
  uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Stable 64-bit hash (FNV-1a) used to derive per-item seeds.
uint64_t HashSeed(uint64_t seed, const std::string& tag);
uint64_t HashSeed(uint64_t seed, uint64_t a, uint64_t b = 0);

}  // namespace w2s

#endif  // W2S_COMMON_RNG_H_
