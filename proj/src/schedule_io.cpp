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

#include "fixedzz/schedule_io.hpp"

#include <charconv>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <vector>

namespace fixedzz {

std::string format_real(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

namespace {

const char *gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::Not:
        return "NOT";
    case GateKind::H:
        return "H";
    case GateKind::RZ:
        return "RZ";
    case GateKind::RX:
        return "RX";
    case GateKind::Matrix:
        return "U";
    }
    return "?";
}

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            words.push_back(line.substr(start, i - start));
        }
    }
    return words;
}

[[noreturn]] void fail(std::size_t line_no, const std::string &msg) {
    throw ValidationError("schedule line " + std::to_string(line_no) + ": " + msg);
}

double to_real(std::string_view word, std::size_t line_no) {
    double value = 0.0;
    const char *end = word.data() + word.size();
    auto [ptr, ec] = std::from_chars(word.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        fail(line_no, "bad number '" + std::string(word) + "'");
    }
    return value;
}

unsigned to_index(std::string_view word, std::size_t line_no) {
    unsigned value = 0;
    const char *end = word.data() + word.size();
    auto [ptr, ec] = std::from_chars(word.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        fail(line_no, "bad qubit index '" + std::string(word) + "'");
    }
    return value;
}

} // namespace

void write_schedule(std::ostream &out, const PulseSchedule &schedule) {
    out << "duration " << format_real(schedule.duration()) << '\n';
    out << "global_phase " << format_real(schedule.global_phase_correction()) << '\n';
    for (const auto &w : schedule.windows()) {
        out << "average " << format_real(w.begin) << ' ' << format_real(w.end);
        for (unsigned q = 0; q < 64; ++q) {
            if ((w.qubits >> q) & 1U) {
                out << ' ' << q;
            }
        }
        out << '\n';
    }
    for (const auto &e : schedule.events()) {
        out << format_real(e.time) << ' ' << e.qubit << ' ' << gate_name(e.gate.kind);
        switch (e.gate.kind) {
        case GateKind::RZ:
        case GateKind::RX:
            out << ' ' << format_real(e.gate.angle);
            break;
        case GateKind::Matrix:
            for (const auto &z : e.gate.explicit_matrix) {
                out << ' ' << format_real(z.real()) << ' ' << format_real(z.imag());
            }
            break;
        default:
            break;
        }
        out << '\n';
    }
}

std::string schedule_to_string(const PulseSchedule &schedule) {
    std::ostringstream os;
    write_schedule(os, schedule);
    return os.str();
}

PulseSchedule parse_schedule(std::string_view text) {
    PulseSchedule schedule;
    double global_phase = 0.0;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto w = split_words(line);
        if (w.empty()) {
            continue;
        }
        if (w[0] == "duration") {
            if (w.size() != 2) {
                fail(line_no, "expected 'duration <T>'");
            }
            schedule.set_duration(to_real(w[1], line_no));
        } else if (w[0] == "global_phase") {
            if (w.size() != 2) {
                fail(line_no, "expected 'global_phase <phi>'");
            }
            global_phase = to_real(w[1], line_no);
        } else if (w[0] == "average") {
            if (w.size() < 4) {
                fail(line_no, "expected 'average <begin> <end> <q>...'");
            }
            AveragingWindow win{to_real(w[1], line_no), to_real(w[2], line_no), 0};
            for (std::size_t i = 3; i < w.size(); ++i) {
                const unsigned q = to_index(w[i], line_no);
                if (q >= 64) {
                    fail(line_no, "qubit index too large");
                }
                win.qubits |= std::uint64_t{1} << q;
            }
            schedule.add_window(win);
        } else {
            if (w.size() < 3) {
                fail(line_no, "expected '<t> <q> <GATE> [params]'");
            }
            const double t = to_real(w[0], line_no);
            const unsigned q = to_index(w[1], line_no);
            const auto name = w[2];
            auto want = [&](std::size_t n) {
                if (w.size() != 3 + n) {
                    fail(line_no, std::string(name) + " takes " + std::to_string(n) +
                                      " parameter(s)");
                }
            };
            Gate gate;
            if (name == "NOT") {
                want(0);
                gate = Gate::not_gate();
            } else if (name == "H") {
                want(0);
                gate = Gate::hadamard();
            } else if (name == "RZ") {
                want(1);
                gate = Gate::rz(to_real(w[3], line_no));
            } else if (name == "RX") {
                want(1);
                gate = Gate::rx(to_real(w[3], line_no));
            } else if (name == "U") {
                want(8);
                Matrix2 m;
                for (std::size_t i = 0; i < 4; ++i) {
                    m[i] = {to_real(w[3 + 2 * i], line_no), to_real(w[4 + 2 * i], line_no)};
                }
                try {
                    gate = Gate::from_matrix(m);
                } catch (const ValidationError &e) {
                    fail(line_no, e.what());
                }
            } else {
                fail(line_no, "unknown gate '" + std::string(name) + "'");
            }
            schedule.add(t, q, gate);
        }
    }
    schedule.add_global_phase(global_phase);
    return schedule;
}

} // namespace fixedzz
