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

#ifndef W2S_AUDIO_FFT_H_
#define W2S_AUDIO_FFT_H_

#include <complex>
#include <vector>

namespace w2s {

// In-place DFT of a.size() points. Radix-2 when the size is a power of two,
// plain O(N^2) DFT otherwise (n_fft=400 in the 16 kHz domain is small and
// those spectra are cached by callers). inverse=true applies 1/N scaling.
void Fft(std::vector<std::complex<double>>* a, bool inverse);

// One-sided spectrum (n/2+1 bins) of a real frame.
std::vector<std::complex<double>> RealSpectrum(const std::vector<double>& x);

// Inverse of RealSpectrum: reconstructs the length-n real frame from its
// one-sided spectrum (bins beyond n/2 from conjugate symmetry).
std::vector<double> RealInverse(const std::vector<std::complex<double>>& spec,
                                int n);

}  // namespace w2s

#endif  // W2S_AUDIO_FFT_H_
