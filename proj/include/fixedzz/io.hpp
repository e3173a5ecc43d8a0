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

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fixedzz/device.hpp"

namespace fixedzz {

/// Device file:
///
///   {"n_qubits": 3,
///    "couplings": [{"j": 0, "k": 1, "form": "B", "energies": [1.0]},
///                  {"j": 1, "k": 2, "form": "A", "energies": [e1, e2, e3, e4]}]}
///
/// The result is validated. Throws ValidationError.
DeviceModel device_from_json(const nlohmann::json &doc);
nlohmann::json device_to_json(const DeviceModel &model);

/// Reads and parses a JSON file; errors name the path.
nlohmann::json read_json_file(const std::filesystem::path &path);
std::string read_text_file(const std::filesystem::path &path);
DeviceModel load_device(const std::filesystem::path &path);

/// Serializes with every floating-point number at 17 significant digits
/// (non-finite values become null).
std::string dump_json(const nlohmann::json &doc, int indent = 2);

} // namespace fixedzz
