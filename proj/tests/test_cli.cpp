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

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fixedzz/commands.hpp"

using namespace fixedzz;
namespace fs = std::filesystem;
using Catch::Matchers::ContainsSubstring;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    args.insert(args.begin(), "fixedzz");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct ScratchDir {
    fs::path path = fs::temp_directory_path() / ("fixedzz_cli_test_" + std::to_string(::getpid()));
    ScratchDir() { fs::create_directories(path); }
    ~ScratchDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

fs::path scratch() {
    static const ScratchDir dir;
    return dir.path;
}

fs::path write(const std::string &name, const std::string &text) {
    const fs::path p = scratch() / name;
    std::ofstream(p) << text;
    return p;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::string pi_pair() {
    return write("pi_pair.json",
                 R"({"n_qubits": 2, "couplings": [{"j": 0, "k": 1, "form": "B", "energies": [3.141592653589793]}]})")
        .string();
}

std::string unit_triangle() {
    return write("triangle.json", R"({"n_qubits": 3, "couplings": [
        {"j": 0, "k": 1, "form": "B", "energies": [1.0]},
        {"j": 0, "k": 2, "form": "B", "energies": [0.4]},
        {"j": 1, "k": 2, "form": "A", "energies": [0.1, 0.2, 0.5, 1.0]}]})")
        .string();
}

} // namespace

TEST_CASE("synth") {
    SECTION("exact Π pair") {
        const auto r = cli({"synth", "--device", pi_pair(), "--n-max", "10"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        REQUIRE(j["n"] == 1);
        REQUIRE(j["residual"].get<double>() <= 1e-15);
    }
    SECTION("E = 1, n_max = 30 picks n = 22") {
        const auto r = cli({"synth", "--device", unit_triangle(), "--pair", "0", "1", "--n-max", "30"});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        REQUIRE(j["n"] == 22);
        REQUIRE(j["m"] == 3);
        REQUIRE(j["residual"].get<double>() == Catch::Approx(0.008851424871448188).margin(1e-12));
    }
    SECTION("missing coupling and unmet residual exit 2") {
        const fs::path dev = write("sparse.json",
            R"({"n_qubits": 3, "couplings": [{"j": 0, "k": 1, "form": "B", "energies": [1.0]}]})");
        const auto r = cli({"synth", "--device", dev.string(), "--pair", "0", "2"});
        REQUIRE(r.code == 2);
        REQUIRE_THAT(r.err, ContainsSubstring("no coupling"));
        const auto tight = cli({"synth", "--device", unit_triangle(), "--n-max", "3",
                                "--max-residual", "1e-3"});
        REQUIRE(tight.code == 2);
    }
    SECTION("usage errors exit 1") {
        REQUIRE(cli({"synth"}).code == 1);
        REQUIRE(cli({"synth", "--device", (scratch() / "nope.json").string()}).code == 1);
        REQUIRE(cli({"bogus"}).code == 1);
        const fs::path bad = write("bad.json", R"({"n_qubits": 2, "couplings": [{"j": 0, "k": 0, "form": "B", "energies": [1]}]})");
        const auto r = cli({"synth", "--device", bad.string()});
        REQUIRE(r.code == 1);
        REQUIRE_THAT(r.err, ContainsSubstring("self-coupling"));
    }
}

TEST_CASE("idle-bench") {
    const std::string dev = unit_triangle();
    SECTION("expectation mode is exact") {
        const fs::path csv = scratch() / "expect.csv";
        const auto r = cli({"idle-bench", "--device", dev, "--mode", "expectation", "--lambda", "50",
                            "--lambda", "800", "--trials", "3", "--separated", "0", "1", "--out",
                            csv.string()});
        REQUIRE(r.code == 0);
        std::istringstream rows(slurp(csv));
        std::string line;
        std::getline(rows, line);
        REQUIRE(line.rfind("# infidelity", 0) == 0);
        std::getline(rows, line);
        REQUIRE(line == "lambda,trial,duration,infidelity,seed");
        int count = 0;
        while (std::getline(rows, line)) {
            std::vector<std::string> cells;
            std::stringstream ss(line);
            for (std::string c; std::getline(ss, c, ',');) {
                cells.push_back(c);
            }
            REQUIRE(cells.size() == 5);
            REQUIRE(std::stod(cells[3]) <= 1e-10);
            ++count;
        }
        REQUIRE(count == 6);
        const auto summary = nlohmann::json::parse(slurp(scratch() / "expect.summary.json"));
        REQUIRE(summary["points"].size() == 2);
        REQUIRE(nlohmann::json::parse(r.out) == summary);
    }
    SECTION("config file, byte-identical CSV across runs and worker counts") {
        const fs::path cfg = write("bench.json", R"({"device": "triangle.json", "mode": "stochastic",
            "lambda": [50, 200], "trials": 30, "master_seed": 12, "separated": [0, 1],
            "out": "bench.csv"})");
        REQUIRE(cli({"idle-bench", "--config", cfg.string()}).code == 0);
        const std::string first = slurp(scratch() / "bench.csv");
        REQUIRE(cli({"idle-bench", "--config", cfg.string()}).code == 0);
        REQUIRE(slurp(scratch() / "bench.csv") == first);
        REQUIRE(cli({"idle-bench", "--config", cfg.string(), "--workers", "3"}).code == 0);
        REQUIRE(slurp(scratch() / "bench.csv") == first);
        REQUIRE(cli({"idle-bench", "--config", cfg.string(), "--seed", "13"}).code == 0);
        REQUIRE(slurp(scratch() / "bench.csv") != first);
        const auto summary = nlohmann::json::parse(slurp(scratch() / "bench.summary.json"));
        REQUIRE(summary.contains("fit_slope"));
        REQUIRE(summary["master_seed"] == 13);
    }
    SECTION("bad values") {
        REQUIRE(cli({"idle-bench", "--device", dev, "--trials", "1", "--out",
                     (scratch() / "x.csv").string()}).code == 1);
        REQUIRE(cli({"idle-bench", "--device", dev, "--mode", "sideways", "--out",
                     (scratch() / "x.csv").string()}).code == 1);
    }
}

TEST_CASE("run and reconstruct") {
    const std::string dev = pi_pair();
    SECTION("Bell circuit on an exact pair") {
        const fs::path circ = write("bell.txt", "qubits 2\nH 0\nCNOT 0 1\n");
        const fs::path sched = scratch() / "bell.sched";
        const auto r = cli({"run", "--device", dev, "--circuit", circ.string(), "--mode",
                            "expectation", "--n-max", "10", "--out", sched.string()});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        REQUIRE(j["fidelity"].get<double>() == Catch::Approx(1.0).margin(1e-9));
        REQUIRE(j["swap_count"] == 0);
        REQUIRE(slurp(sched).rfind("duration ", 0) == 0);

        const auto u = cli({"reconstruct", "--device", dev, "--circuit", circ.string(), "--mode",
                            "expectation", "--n-max", "10"});
        REQUIRE(u.code == 0);
        const auto k = nlohmann::json::parse(u.out);
        REQUIRE(k["unitary"].size() == 4);
        REQUIRE(k["fidelity"].get<double>() == Catch::Approx(1.0).margin(1e-9));
    }
    SECTION("empty circuit") {
        const fs::path circ = write("empty.txt", "qubits 2\n");
        const auto r = cli({"run", "--device", dev, "--circuit", circ.string()});
        REQUIRE(r.code == 0);
        const auto j = nlohmann::json::parse(r.out);
        REQUIRE(j["fidelity"].get<double>() == Catch::Approx(1.0).margin(1e-12));
        REQUIRE(j["pulse_count"] == 0);
    }
    SECTION("stochastic run is deterministic per seed") {
        const fs::path circ = write("bell2.txt", "qubits 2\nH 0\nCNOT 0 1\n");
        const std::vector<std::string> args{"run", "--device", unit_triangle(), "--circuit",
                                            circ.string(), "--lambda", "500", "--trials", "3",
                                            "--seed", "4", "--n-max", "30"};
        const auto a = cli(args);
        REQUIRE(a.code == 0);
        REQUIRE(cli(args).out == a.out);
    }
    SECTION("circuit errors surface with context") {
        const fs::path circ = write("broken.txt", "qubits 2\nH 0\nTOFFOLI 0 1\n");
        const auto r = cli({"run", "--device", dev, "--circuit", circ.string()});
        REQUIRE(r.code == 1);
        REQUIRE_THAT(r.err, ContainsSubstring("line 3"));
    }
}

TEST_CASE("installed binary honours the exit-code contract") {
#ifdef FIXEDZZ_CLI_PATH
    const char *path = FIXEDZZ_CLI_PATH;
#else
    const char *path = std::getenv("FIXEDZZ_CLI_PATH");
#endif
    if (path == nullptr) {
        SKIP("FIXEDZZ_CLI_PATH not set");
    }
    auto status = [&](const std::string &args) {
        const int raw = std::system((std::string(path) + " " + args + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(raw);
    };
    REQUIRE(status("--help") == 0);
    REQUIRE(status("synth --device " + pi_pair()) == 0);
    REQUIRE(status("synth") == 1);
    const fs::path dev = write("sparse2.json",
        R"({"n_qubits": 3, "couplings": [{"j": 0, "k": 1, "form": "B", "energies": [1.0]}]})");
    REQUIRE(status("synth --device " + dev.string() + " --pair 0 2") == 2);
}
