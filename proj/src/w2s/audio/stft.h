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

#ifndef W2S_AUDIO_STFT_H_
#define W2S_AUDIO_STFT_H_

#include <complex>
#include <vector>

#include <Eigen/Core>

#include "w2s/audio/frame_spec.h"

namespace w2s {

// Periodic Hann window of length n.
std::vector<double> HannWindow(int n);

// Reflect-pads by n_fft/2 on both sides (the center convention behind
// NumFrames) and returns the padded signal.
std::vector<double> CenterPad(const std::vector<double>& x, int n_fft);

// Complex STFT. Rows are frames (NumFrames of them), columns the
// n_fft/2 + 1 one-sided bins. The window is a periodic Hann of length
// spec.win zero-padded to n_fft.
Eigen::MatrixXcd Stft(const Waveform& w, const FrameSpec& spec);

// Inverse STFT by windowed overlap-add with window-square normalization.
// Output is trimmed/padded to exactly T * hop samples so synthesis lengths
// follow the same law as the neural vocoder.
Waveform Istft(const Eigen::MatrixXcd& spec_frames, const FrameSpec& spec);

}  // namespace w2s

#endif  // W2S_AUDIO_STFT_H_
