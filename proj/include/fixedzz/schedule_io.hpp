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

#include <iosfwd>
#include <string>
#include <string_view>

#include "fixedzz/state.hpp"

namespace fixedzz {

// Line-based schedule text, numbers at 17 significant digits:
//
//   duration <T>
//   global_phase <phi>
//   average <begin> <end> <q> [<q> ...]
//   <t> <q> NOT | H | RZ <theta> | RX <theta> | U <8 reals, row-major re/im>
//
// '#' starts a comment.

void write_schedule(std::ostream &out, const PulseSchedule &schedule);
std::string schedule_to_string(const PulseSchedule &schedule);

/// Throws ValidationError with the offending line number.
PulseSchedule parse_schedule(std::string_view text);

/// "%.17g" rendering shared by every text, CSV and JSON writer.
std::string format_real(double value);

} // namespace fixedzz
