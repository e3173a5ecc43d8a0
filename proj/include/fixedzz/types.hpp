// Copyright 2026 The fixedzz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fixedzz {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix: {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

using Matrix = Eigen::MatrixXcd;

using QubitIndex = unsigned;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Malformed input: bad device, bad circuit text, bad schedule, bad config.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical construction could not be carried out (zero coupling,
/// residual above a requested bound, ...).
class SynthesisError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline Complex cis(double angle) { return {std::cos(angle), std::sin(angle)}; }

} // namespace fixedzz
