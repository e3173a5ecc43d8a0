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

#include <fstream>
#include <sstream>

#include "fixedzz/io.hpp"

namespace fixedzz {

DeviceModel device_from_json(const nlohmann::json &doc) {
    try {
        if (!doc.is_object()) {
            throw ValidationError("device document must be an object");
        }
        const auto n = doc.at("n_qubits").get<long long>();
        if (n <= 0) {
            throw ValidationError("n_qubits must be positive");
        }
        std::vector<CouplingSpec> couplings;
        for (const auto &c : doc.value("couplings", nlohmann::json::array())) {
            const auto j = c.at("j").get<long long>();
            const auto k = c.at("k").get<long long>();
            if (j < 0 || k < 0) {
                throw ValidationError("qubit index out of range in coupling");
            }
            const auto form = c.at("form").get<std::string>();
            const auto energies = c.at("energies").get<std::vector<double>>();
            CouplingSpec spec;
            spec.j = static_cast<QubitIndex>(j);
            spec.k = static_cast<QubitIndex>(k);
            if (form == "A") {
                if (energies.size() != 4) {
                    throw ValidationError("form A coupling needs 4 energies");
                }
                spec.energies = FormA{energies[0], energies[1], energies[2], energies[3]};
            } else if (form == "B") {
                if (energies.size() != 1) {
                    throw ValidationError("form B coupling needs 1 energy");
                }
                spec.energies = FormB{energies[0]};
            } else {
                throw ValidationError("coupling form must be \"A\" or \"B\", got \"" + form + "\"");
            }
            couplings.push_back(spec);
        }
        return validate_device(DeviceModel(static_cast<unsigned>(n), std::move(couplings)));
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError(std::string("malformed device: ") + e.what());
    }
}

nlohmann::json device_to_json(const DeviceModel &model) {
    nlohmann::json doc;
    doc["n_qubits"] = model.n_qubits();
    doc["couplings"] = nlohmann::json::array();
    for (const auto &c : model.couplings()) {
        nlohmann::json entry{{"j", c.j}, {"k", c.k}};
        if (const auto *b = std::get_if<FormB>(&c.energies)) {
            entry["form"] = "B";
            entry["energies"] = {b->e};
        } else {
            const auto &a = std::get<FormA>(c.energies);
            entry["form"] = "A";
            entry["energies"] = {a.e1, a.e2, a.e3, a.e4};
        }
        doc["couplings"].push_back(entry);
    }
    return doc;
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ValidationError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

nlohmann::json read_json_file(const std::filesystem::path &path) {
    const std::string text = read_text_file(path);
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

DeviceModel load_device(const std::filesystem::path &path) {
    try {
        return device_from_json(read_json_file(path));
    } catch (const ValidationError &e) {
        const std::string what = e.what();
        if (what.rfind(path.string(), 0) == 0) {
            throw;
        }
        throw ValidationError(path.string() + ": " + what);
    }
}

} // namespace fixedzz
