// Copyright 2026 The qtele Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qtele {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Unknown, duplicate, or mismatched qubit labels.
class LabelError : public Error {
  public:
    using Error::Error;
};

/// Amplitude count, bitstring length, or register size is inconsistent.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// Amplitudes are not finite or not normalized.
class NormalizationError : public Error {
  public:
    using Error::Error;
};

/// A forced measurement outcome has (numerically) zero probability.
class ZeroProbabilityOutcome : public Error {
  public:
    using Error::Error;
};

/// Coefficients cannot be normalized to a valid input state.
class InvalidCoefficients : public Error {
  public:
    using Error::Error;
};

/// A channel definition depends on the unknown input coefficients.
class ConstructibilityError : public Error {
  public:
    using Error::Error;
};

/// The state is not of the four-term input form.
class InputFamilyError : public Error {
  public:
    using Error::Error;
};

/// The compressed state does not factor as expected.
class FactorizationError : public Error {
  public:
    using Error::Error;
};

/// Malformed textual input (Bell labels, outcomes, coefficient lists).
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace qtele
