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

#include "w2s/audio/frame_spec.h"

#include <string>

#include "w2s/common/error.h"

namespace w2s {

void FrameSpec::Validate() const {
  if (sample_rate < 1) throw ValidationError("FrameSpec: sample_rate < 1");
  if (hop < 1) throw ValidationError("FrameSpec: hop < 1");
  if (win < 1 || win > n_fft) {
    throw ValidationError("FrameSpec: require 1 <= win <= n_fft");
  }
  if (n_mels < 1) throw ValidationError("FrameSpec: n_mels < 1");
  if (!(fmin >= 0.0 && fmin < fmax && fmax <= sample_rate / 2.0)) {
    throw ValidationError("FrameSpec: require 0 <= fmin < fmax <= sr/2");
  }
}

FrameSpec Spec16() {
  return FrameSpec{16000, 160, 400, 400, 80, 0.0, 8000.0};
}

FrameSpec Spec22() {
  return FrameSpec{22050, 256, 1024, 1024, 80, 0.0, 8000.0};
}

int64_t NumFrames(int64_t n_samples, const FrameSpec& spec) {
  spec.Validate();
  if (n_samples < spec.win) {
    throw ArgumentError("NumFrames: input too short (" +
                        std::to_string(n_samples) + " samples < win " +
                        std::to_string(spec.win) + ")");
  }
  return n_samples / spec.hop + 1;
}

}  // namespace w2s
