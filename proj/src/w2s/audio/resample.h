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

#ifndef W2S_AUDIO_RESAMPLE_H_
#define W2S_AUDIO_RESAMPLE_H_

#include "w2s/audio/frame_spec.h"

namespace w2s {

// Band-limited (windowed-sinc) resampling. Output length is
// round(len * target_rate / source_rate); identity when rates match.
Waveform Resample(const Waveform& w, int target_rate);

}  // namespace w2s

#endif  // W2S_AUDIO_RESAMPLE_H_
