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

#include <cmath>
#include <string>

#include "fixedzz/io.hpp"
#include "fixedzz/schedule_io.hpp"

namespace fixedzz {
namespace {

void emit(std::string &out, const nlohmann::json &v, int indent, int depth) {
    const bool pretty = indent >= 0;
    auto newline = [&](int d) {
        if (pretty) {
            out += '\n';
            out.append(static_cast<std::size_t>(indent * d), ' ');
        }
    };
    switch (v.type()) {
    case nlohmann::json::value_t::object: {
        if (v.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!first) {
                out += ',';
            }
            first = false;
            newline(depth + 1);
            out += nlohmann::json(it.key()).dump();
            out += pretty ? ": " : ":";
            emit(out, it.value(), indent, depth + 1);
        }
        newline(depth);
        out += '}';
        return;
    }
    case nlohmann::json::value_t::array: {
        if (v.empty()) {
            out += "[]";
            return;
        }
        // Rows of numbers stay on one line; nested structures get one per line.
        bool flat = true;
        for (const auto &item : v) {
            flat = flat && !item.is_structured();
        }
        out += '[';
        bool first = true;
        for (const auto &item : v) {
            if (!first) {
                out += (pretty && flat) ? ", " : ",";
            }
            first = false;
            if (!flat) {
                newline(depth + 1);
            }
            emit(out, item, indent, depth + 1);
        }
        if (!flat) {
            newline(depth);
        }
        out += ']';
        return;
    }
    case nlohmann::json::value_t::number_float: {
        const double x = v.get<double>();
        out += std::isfinite(x) ? format_real(x) : "null";
        return;
    }
    default:
        out += v.dump();
        return;
    }
}

} // namespace

std::string dump_json(const nlohmann::json &doc, int indent) {
    std::string out;
    emit(out, doc, indent, 0);
    out += '\n';
    return out;
}

} // namespace fixedzz
