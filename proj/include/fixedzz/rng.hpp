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

#include <cstdint>

namespace fixedzz {

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Counter-based random stream: output i is mix64(key + (i + 1) * golden).
/// Streams are addressed by key, so any (master_seed, trial, frame, qubit)
/// stream can be produced independently of how many others were drawn.
class RngStream {
  public:
    explicit RngStream(std::uint64_t key) : key_(key) {}

    std::uint64_t key() const { return key_; }
    std::uint64_t next_u64();
    /// Uniform in (0, 1], 53-bit resolution.
    double next_unit();
    /// Exponential variate with the given rate, by inversion.
    double next_exponential(double rate);

  private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// Key for one trial of a run; also what the CSV reports as `seed`.
std::uint64_t trial_key(std::uint64_t master_seed, std::uint64_t trial);

/// Stream for one qubit's pulse train within one decoupled frame of a trial.
RngStream pulse_stream(std::uint64_t master_seed, std::uint64_t trial, std::uint64_t frame,
                       std::uint64_t qubit);

} // namespace fixedzz
