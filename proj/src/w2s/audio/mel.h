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

#ifndef W2S_AUDIO_MEL_H_
#define W2S_AUDIO_MEL_H_

#include <vector>

#include <Eigen/Core>

#include "w2s/audio/frame_spec.h"

namespace w2s {

// Log floor applied to mel energies: log(max(energy, kMelFloor)).
inline constexpr double kMelFloor = 1e-5;

double HzToMel(double hz);
double MelToHz(double mel);

// Triangular mel filterbank, n_mels x (n_fft/2 + 1), peak-normalized
// triangles on the Slaney scale (linear below 1 kHz).
Eigen::MatrixXd MelFilterbank(const FrameSpec& spec);

// Peak frequencies (Hz) of the filters in MelFilterbank(spec).
std::vector<double> MelCenterFrequencies(const FrameSpec& spec);

// Log-mel spectrogram of w: power spectrum -> mel filterbank ->
// log(max(e, kMelFloor)). Deterministic; T == NumFrames(len, spec).
// Throws DomainError on sample-rate mismatch.
MelSpectrogram ComputeMel(const Waveform& w, const FrameSpec& spec);

// Linear-frequency power-spectrum estimate from a log-mel matrix via the
// regularized pseudo-inverse of the filterbank, clamped at zero. T x n_bins.
Eigen::MatrixXd MelToLinearPower(const MelSpectrogram& mel);

}  // namespace w2s

#endif  // W2S_AUDIO_MEL_H_
