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

#ifndef W2S_AUDIO_FRAME_SPEC_H_
#define W2S_AUDIO_FRAME_SPEC_H_

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace w2s {

// Parameters of one analysis/synthesis frame domain. Two instances are used
// throughout: the 16 kHz analysis domain feeding the content encoder and the
// 22.05 kHz synthesis domain of the acoustic model and vocoder.
struct FrameSpec {
  int sample_rate = 0;
  int hop = 0;
  int win = 0;
  int n_fft = 0;
  int n_mels = 0;
  double fmin = 0.0;
  double fmax = 0.0;

  // Throws ValidationError if any invariant is violated.
  void Validate() const;

  bool operator==(const FrameSpec&) const = default;
};

// 16 kHz analysis domain: 10 ms hop, 25 ms window.
FrameSpec Spec16();
// 22.05 kHz synthesis domain: hop 256, window 1024.
FrameSpec Spec22();

struct Waveform {
  std::vector<double> samples;
  int sample_rate = 0;

  int64_t size() const { return static_cast<int64_t>(samples.size()); }
  double DurationSeconds() const {
    return sample_rate > 0 ? static_cast<double>(size()) / sample_rate : 0.0;
  }
};

// Time x n_mels log-magnitude mel energies together with the FrameSpec that
// produced them.
struct MelSpectrogram {
  Eigen::MatrixXd frames;  // T x n_mels
  FrameSpec spec;

  int64_t T() const { return frames.rows(); }
};

// Number of analysis frames for an input of n_samples under the
// center-padded convention: floor(n_samples / hop) + 1.
// Throws ArgumentError when n_samples < spec.win.
int64_t NumFrames(int64_t n_samples, const FrameSpec& spec);

}  // namespace w2s

#endif  // W2S_AUDIO_FRAME_SPEC_H_
