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

#include "fixedzz/rng.hpp"

#include <cmath>

namespace fixedzz {
namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
}

std::uint64_t mix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t RngStream::next_u64() {
    ++counter_;
    return mix64(key_ + counter_ * kGolden);
}

double RngStream::next_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngStream::next_exponential(double rate) { return -std::log(next_unit()) / rate; }

std::uint64_t trial_key(std::uint64_t master_seed, std::uint64_t trial) {
    return mix64(mix64(master_seed + kGolden) ^ (trial * 0xD1B54A32D192ED03ULL + 1));
}

RngStream pulse_stream(std::uint64_t master_seed, std::uint64_t trial, std::uint64_t frame,
                       std::uint64_t qubit) {
    std::uint64_t key = trial_key(master_seed, trial);
    key = mix64(key ^ (frame * 0x8CB92BA72F3D8DD7ULL + 0x632BE59BD9B4E019ULL));
    key = mix64(key ^ (qubit * 0xABC98388FB8FAC03ULL + 0x2545F4914F6CDD1DULL));
    return RngStream(key);
}

} // namespace fixedzz
