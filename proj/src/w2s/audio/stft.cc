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

#include "w2s/audio/stft.h"

#include <cmath>

#include "w2s/audio/fft.h"
#include "w2s/common/error.h"

namespace w2s {

std::vector<double> HannWindow(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = 0.5 - 0.5 * std::cos(2.0 * M_PI * i / n);
  }
  return w;
}

std::vector<double> CenterPad(const std::vector<double>& x, int n_fft) {
  const int64_t n = static_cast<int64_t>(x.size());
  const int pad = n_fft / 2;
  if (n < pad + 1) throw ArgumentError("CenterPad: input shorter than pad");
  std::vector<double> out(n + 2 * pad);
  for (int i = 0; i < pad; ++i) out[i] = x[pad - i];
  for (int64_t i = 0; i < n; ++i) out[pad + i] = x[i];
  for (int i = 0; i < pad; ++i) out[pad + n + i] = x[n - 2 - i];
  return out;
}

Eigen::MatrixXcd Stft(const Waveform& w, const FrameSpec& spec) {
  spec.Validate();
  if (w.sample_rate != spec.sample_rate) {
    throw DomainError("Stft: waveform rate does not match spec");
  }
  const int64_t T = NumFrames(w.size(), spec);
  const int n_fft = spec.n_fft;
  const int n_bins = n_fft / 2 + 1;
  std::vector<double> padded = CenterPad(w.samples, n_fft);
  std::vector<double> window = HannWindow(spec.win);
  // Window centered inside the n_fft frame when win < n_fft.
  const int woff = (n_fft - spec.win) / 2;

  Eigen::MatrixXcd out(T, n_bins);
  std::vector<double> frame(n_fft);
  for (int64_t t = 0; t < T; ++t) {
    std::fill(frame.begin(), frame.end(), 0.0);
    const int64_t start = t * spec.hop;
    for (int i = 0; i < spec.win; ++i) {
      frame[woff + i] = padded[start + woff + i] * window[i];
    }
    auto spec_t = RealSpectrum(frame);
    for (int k = 0; k < n_bins; ++k) out(t, k) = spec_t[k];
  }
  return out;
}

Waveform Istft(const Eigen::MatrixXcd& spec_frames, const FrameSpec& spec) {
  spec.Validate();
  const int64_t T = spec_frames.rows();
  if (T < 1) throw ArgumentError("Istft: no frames");
  const int n_fft = spec.n_fft;
  const int n_bins = n_fft / 2 + 1;
  if (spec_frames.cols() != n_bins) {
    throw ShapeError("Istft: bin count does not match spec");
  }
  std::vector<double> window = HannWindow(spec.win);
  const int woff = (n_fft - spec.win) / 2;

  const int64_t full = (T - 1) * spec.hop + n_fft;
  std::vector<double> acc(full, 0.0);
  std::vector<double> wsq(full, 0.0);
  std::vector<std::complex<double>> bins(n_bins);
  for (int64_t t = 0; t < T; ++t) {
    for (int k = 0; k < n_bins; ++k) bins[k] = spec_frames(t, k);
    std::vector<double> frame = RealInverse(bins, n_fft);
    const int64_t start = t * spec.hop;
    for (int i = 0; i < spec.win; ++i) {
      acc[start + woff + i] += frame[woff + i] * window[i];
      wsq[start + woff + i] += window[i] * window[i];
    }
  }
  for (int64_t i = 0; i < full; ++i) {
    if (wsq[i] > 1e-9) acc[i] /= wsq[i];
  }

  // Undo the center padding and fix the length at exactly T * hop, the same
  // frames-to-samples law the vocoder generator follows.
  const int64_t target = T * spec.hop;
  const int64_t lead = n_fft / 2 - spec.hop / 2;
  Waveform out;
  out.sample_rate = spec.sample_rate;
  out.samples.assign(target, 0.0);
  for (int64_t i = 0; i < target; ++i) {
    const int64_t j = lead + i;
    if (j >= 0 && j < full) out.samples[i] = acc[j];
  }
  return out;
}

}  // namespace w2s
