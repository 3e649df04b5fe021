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

#ifndef W2S_COMMON_ERROR_H_
#define W2S_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace w2s {

// Base class for all library errors. CLI maps DependencyError to exit
// code 2, everything else to 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad argument value (empty sequence, unknown speaker, t_enc < 1, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Frame-domain mismatch (wrong sample rate / FrameSpec for an operation).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Tensor shape mismatch (channel counts, matrix dims).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Malformed file contents (feature container, WAV, checkpoint).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure (missing file, unreadable, write failure).
class IoError : public Error {
 public:
  using Error::Error;
};

// Manifest / config validation failure.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Inputs that must form a whisper/normal pair do not.
class PairingError : public Error {
 public:
  using Error::Error;
};

// Stage received data it is not allowed to train on.
class DataPolicyError : public Error {
 public:
  using Error::Error;
};

// A required upstream checkpoint or artifact is missing.
class DependencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace w2s

#endif  // W2S_COMMON_ERROR_H_
