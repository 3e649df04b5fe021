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

#include "w2s/audio/mel.h"

#include <cmath>

#include <Eigen/Dense>

#include "w2s/audio/stft.h"
#include "w2s/common/error.h"

namespace w2s {

namespace {
constexpr double kMelBreakHz = 1000.0;
constexpr double kMelBreak = 15.0;  // 1000 Hz in mels (linear part, 200/3 Hz per mel)
const double kLogStep = std::log(6.4) / 27.0;
}  // namespace

double HzToMel(double hz) {
  if (hz < kMelBreakHz) return hz * 3.0 / 200.0;
  return kMelBreak + std::log(hz / kMelBreakHz) / kLogStep;
}

double MelToHz(double mel) {
  if (mel < kMelBreak) return mel * 200.0 / 3.0;
  return kMelBreakHz * std::exp(kLogStep * (mel - kMelBreak));
}

Eigen::MatrixXd MelFilterbank(const FrameSpec& spec) {
  spec.Validate();
  const int n_bins = spec.n_fft / 2 + 1;
  const double mel_lo = HzToMel(spec.fmin);
  const double mel_hi = HzToMel(spec.fmax);
  std::vector<double> edges(spec.n_mels + 2);
  for (int m = 0; m < spec.n_mels + 2; ++m) {
    edges[m] = MelToHz(mel_lo + (mel_hi - mel_lo) * m / (spec.n_mels + 1));
  }
  Eigen::MatrixXd fb = Eigen::MatrixXd::Zero(spec.n_mels, n_bins);
  const double bin_hz = static_cast<double>(spec.sample_rate) / spec.n_fft;
  for (int m = 0; m < spec.n_mels; ++m) {
    const double lo = edges[m], center = edges[m + 1], hi = edges[m + 2];
    for (int k = 0; k < n_bins; ++k) {
      const double f = k * bin_hz;
      double w = 0.0;
      if (f > lo && f < hi) {
        w = f <= center ? (f - lo) / (center - lo) : (hi - f) / (hi - center);
      }
      fb(m, k) = w;
    }
  }
  return fb;
}

std::vector<double> MelCenterFrequencies(const FrameSpec& spec) {
  const double mel_lo = HzToMel(spec.fmin);
  const double mel_hi = HzToMel(spec.fmax);
  std::vector<double> centers(spec.n_mels);
  for (int m = 0; m < spec.n_mels; ++m) {
    centers[m] = MelToHz(mel_lo + (mel_hi - mel_lo) * (m + 1) / (spec.n_mels + 1));
  }
  return centers;
}

MelSpectrogram ComputeMel(const Waveform& w, const FrameSpec& spec) {
  Eigen::MatrixXcd stft = Stft(w, spec);  // validates rate and length
  Eigen::MatrixXd power = stft.cwiseAbs2();
  Eigen::MatrixXd fb = MelFilterbank(spec);
  MelSpectrogram mel;
  mel.spec = spec;
  mel.frames = power * fb.transpose();
  mel.frames = mel.frames.cwiseMax(kMelFloor).array().log().matrix();
  return mel;
}

Eigen::MatrixXd MelToLinearPower(const MelSpectrogram& mel) {
  const Eigen::MatrixXd fb = MelFilterbank(mel.spec);
  Eigen::MatrixXd energies = mel.frames.array().exp().matrix();  // T x n_mels
  // energies ~ power * fb^T  =>  power ~ energies * (fb fb^T + dI)^-1 fb
  Eigen::MatrixXd gram = fb * fb.transpose();
  gram.diagonal().array() += 1e-8;
  Eigen::MatrixXd proj = gram.ldlt().solve(fb);  // n_mels x n_bins
  Eigen::MatrixXd power = energies * proj;
  return power.cwiseMax(0.0);
}

}  // namespace w2s
