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

#include "w2s/audio/fft.h"

#include <cmath>

#include "w2s/common/error.h"

namespace w2s {

namespace {

bool IsPowerOfTwo(size_t n) { return n > 0 && (n & (n - 1)) == 0; }

void Radix2(std::vector<std::complex<double>>* a, bool inverse) {
  auto& v = *a;
  const size_t n = v.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(v[i], v[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    double ang = 2.0 * M_PI / static_cast<double>(len) * (inverse ? 1 : -1);
    std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = v[i + k];
        std::complex<double> t = v[i + k + len / 2] * w;
        v[i + k] = u + t;
        v[i + k + len / 2] = u - t;
        w *= wlen;
      }
    }
  }
}

void NaiveDft(std::vector<std::complex<double>>* a, bool inverse) {
  const auto& in = *a;
  const size_t n = in.size();
  std::vector<std::complex<double>> out(n);
  const double sign = inverse ? 1.0 : -1.0;
  for (size_t k = 0; k < n; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (size_t t = 0; t < n; ++t) {
      double ang = sign * 2.0 * M_PI * static_cast<double>(k * t % n) /
                   static_cast<double>(n);
      acc += in[t] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  *a = std::move(out);
}

}  // namespace

void Fft(std::vector<std::complex<double>>* a, bool inverse) {
  if (a->empty()) throw ArgumentError("Fft: empty input");
  if (IsPowerOfTwo(a->size())) {
    Radix2(a, inverse);
  } else {
    NaiveDft(a, inverse);
  }
  if (inverse) {
    double scale = 1.0 / static_cast<double>(a->size());
    for (auto& z : *a) z *= scale;
  }
}

std::vector<std::complex<double>> RealSpectrum(const std::vector<double>& x) {
  std::vector<std::complex<double>> a(x.begin(), x.end());
  Fft(&a, false);
  a.resize(x.size() / 2 + 1);
  return a;
}

std::vector<double> RealInverse(const std::vector<std::complex<double>>& spec,
                                int n) {
  if (static_cast<int>(spec.size()) != n / 2 + 1) {
    throw ShapeError("RealInverse: spectrum size does not match n");
  }
  std::vector<std::complex<double>> a(n);
  for (int k = 0; k <= n / 2; ++k) a[k] = spec[k];
  for (int k = n / 2 + 1; k < n; ++k) a[k] = std::conj(spec[n - k]);
  Fft(&a, true);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = a[i].real();
  return out;
}

}  // namespace w2s
