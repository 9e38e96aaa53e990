// Copyright 2026 The symvqc Authors
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

// Command-line front end. Talks to the library only through symvqc.h.

#include "symvqc/symvqc.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <unistd.h>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailed = 2;

/// Bad input detected after flag parsing; reported with exit code 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CircuitDeleter {
    void operator()(symvqc_circuit *c) const { symvqc_circuit_free(c); }
};
struct FidelityDeleter {
    void operator()(symvqc_fidelity_result *r) const { symvqc_fidelity_result_free(r); }
};
struct VqeDeleter {
    void operator()(symvqc_vqe_result *r) const { symvqc_vqe_result_free(r); }
};
struct StringDeleter {
    void operator()(char *s) const { symvqc_string_free(s); }
};

using CircuitPtr = std::unique_ptr<symvqc_circuit, CircuitDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

void check(symvqc_status st) {
    if (st != SYMVQC_OK) {
        throw UsageError(std::string(symvqc_status_string(st)) + ": " + symvqc_last_error());
    }
}

std::string take(char *s) {
    OwnedString owned(s);
    return owned ? std::string(owned.get()) : std::string();
}

/// Writes via a temporary file in the same directory, then renames.
void write_atomically(const std::string &path, const std::string &content) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        }
        out << content;
        out.flush();
        if (!out) {
            throw std::runtime_error("write to " + tmp.string() + " failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename onto " + path + ": " + ec.message());
    }
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// One manifest per run, next to the primary output.
class Manifest {
  public:
    Manifest(std::string command, nlohmann::ordered_json flags)
        : command_(std::move(command)), flags_(std::move(flags)), start_(std::chrono::steady_clock::now()) {}

    void write(const std::string &primary_output, std::vector<std::string> outputs) const {
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        nlohmann::ordered_json m;
        m["schema"] = "symvqc-manifest/1";
        m["command"] = command_;
        m["flags"] = flags_;
        m["seed"] = flags_.contains("seed") ? flags_["seed"] : nlohmann::ordered_json(nullptr);
        m["version"] = symvqc_version();
        m["outputs"] = outputs;
        m["wall_clock_seconds"] = seconds;
        write_atomically(primary_output + ".manifest.json", m.dump(2) + "\n");
    }

  private:
    std::string command_;
    nlohmann::ordered_json flags_;
    std::chrono::steady_clock::time_point start_;
};

CircuitPtr load_circuit(const std::string &path) {
    const std::string text = read_file(path);
    symvqc_circuit *c = nullptr;
    check(symvqc_circuit_from_json(text.c_str(), &c));
    return CircuitPtr(c);
}

std::size_t thread_cap_from_env() {
    const char *v = std::getenv("SYMVQC_THREADS");
    if (v == nullptr || *v == '\0') {
        return 1;
    }
    char *end = nullptr;
    const unsigned long n = std::strtoul(v, &end, 10);
    if (*end != '\0' || n == 0) {
        throw UsageError("SYMVQC_THREADS must be a positive integer");
    }
    return n;
}

struct BuildArgs {
    std::size_t sites = 4;
    std::size_t particles = 2;
    std::string gate = "a";
    std::string variant = "brickwall";
    std::string out;
};

int run_build(const BuildArgs &a) {
    Manifest manifest("build", {{"sites", a.sites},
                                {"particles", a.particles},
                                {"gate", a.gate},
                                {"variant", a.variant},
                                {"out", a.out}});
    symvqc_circuit *raw = nullptr;
    if (a.variant == "swap24") {
        if (a.sites != 4 || a.particles != 2) {
            throw UsageError("the swap24 variant requires --sites 4 --particles 2");
        }
        check(symvqc_circuit_build_swap24(a.gate.c_str(), &raw));
    } else {
        check(symvqc_circuit_build_brickwall(a.sites, a.particles, a.gate.c_str(), &raw));
    }
    CircuitPtr c(raw);
    symvqc_circuit_info info{};
    check(symvqc_circuit_get_info(c.get(), &info));
    char *json = nullptr;
    check(symvqc_circuit_to_json(c.get(), &json));
    write_atomically(a.out, take(json));
    manifest.write(a.out, {a.out});
    std::cout << "gates=" << info.parameterized_gates << " params=" << info.free_parameters
              << " cnots=" << info.cnots << "\n";
    return kExitOk;
}

struct FidelityArgs {
    std::string circuit;
    std::size_t targets = 50;
    std::uint64_t seed = 0;
    std::string source = "haar";
    std::size_t max_iterations = 4000;
    std::size_t starts = 10;
    std::string out;
};

int run_fidelity(const FidelityArgs &a) {
    Manifest manifest("fidelity", {{"circuit", a.circuit},
                                   {"targets", a.targets},
                                   {"seed", a.seed},
                                   {"target_source", a.source},
                                   {"max_iterations", a.max_iterations},
                                   {"starts", a.starts},
                                   {"out", a.out}});
    CircuitPtr c = load_circuit(a.circuit);
    symvqc_fidelity_options opts;
    symvqc_fidelity_options_init(&opts);
    opts.targets = a.targets;
    opts.seed = a.seed;
    opts.source = a.source == "circuit" ? SYMVQC_TARGET_CIRCUIT : SYMVQC_TARGET_HAAR;
    opts.max_iterations = a.max_iterations;
    opts.starts = a.starts;
    symvqc_fidelity_result *raw = nullptr;
    check(symvqc_fidelity_run(c.get(), &opts, &raw));
    std::unique_ptr<symvqc_fidelity_result, FidelityDeleter> r(raw);
    char *csv = nullptr;
    check(symvqc_fidelity_result_csv(r.get(), &csv));
    write_atomically(a.out, take(csv));
    manifest.write(a.out, {a.out});
    char line[64];
    std::snprintf(line, sizeof line, "mean_fidelity=%.12f\n", symvqc_fidelity_result_mean(r.get()));
    std::cout << line;
    return kExitOk;
}

struct VqeArgs {
    std::string circuit;
    std::string model = "xxz";
    double gamma = 1.0;
    std::string boundary = "open";
    std::string estimator = "exact";
    std::string noise = "0,0,0";
    std::size_t trajectories = 16;
    std::size_t trials = 20;
    std::uint64_t seed = 0;
    std::string optimizer = "nelder-mead";
    std::size_t max_iterations = 1000;
    std::size_t starts = 1;
    std::string out;
};

std::size_t parse_estimator(const std::string &s) {
    if (s == "exact") {
        return 0;
    }
    const std::string prefix = "shots:";
    if (s.rfind(prefix, 0) == 0) {
        const std::string n = s.substr(prefix.size());
        char *end = nullptr;
        const unsigned long long v = std::strtoull(n.c_str(), &end, 10);
        if (!n.empty() && *end == '\0' && v > 0) {
            return static_cast<std::size_t>(v);
        }
    }
    throw UsageError("--estimator must be exact or shots:N with N > 0");
}

std::array<double, 3> parse_noise(const std::string &s) {
    std::vector<std::string> items;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        items.push_back(item);
    }
    if (items.size() != 3 || s.back() == ',') {
        throw UsageError("--noise must be three comma-separated probabilities p1,p2,pro");
    }
    std::array<double, 3> p{};
    for (std::size_t i = 0; i < 3; ++i) {
        char *end = nullptr;
        p[i] = std::strtod(items[i].c_str(), &end);
        if (items[i].empty() || *end != '\0') {
            throw UsageError("--noise: cannot parse '" + items[i] + "'");
        }
    }
    return p;
}

int run_vqe(const VqeArgs &a) {
    Manifest manifest("vqe", {{"circuit", a.circuit},
                              {"model", a.model},
                              {"gamma", a.gamma},
                              {"boundary", a.boundary},
                              {"estimator", a.estimator},
                              {"noise", a.noise},
                              {"trajectories", a.trajectories},
                              {"trials", a.trials},
                              {"seed", a.seed},
                              {"optimizer", a.optimizer},
                              {"max_iterations", a.max_iterations},
                              {"starts", a.starts},
                              {"out", a.out}});
    const std::size_t shots = parse_estimator(a.estimator);
    const auto noise = parse_noise(a.noise);
    CircuitPtr c = load_circuit(a.circuit);
    symvqc_vqe_options opts;
    symvqc_vqe_options_init(&opts);
    opts.gamma = a.gamma;
    opts.boundary = a.boundary.c_str();
    opts.shots = shots;
    opts.p1 = noise[0];
    opts.p2 = noise[1];
    opts.p_readout = noise[2];
    opts.trajectories = a.trajectories;
    opts.trials = a.trials;
    opts.seed = a.seed;
    opts.optimizer = a.optimizer.c_str();
    opts.max_iterations = a.max_iterations;
    opts.starts = a.starts;
    opts.threads = thread_cap_from_env();
    symvqc_vqe_result *raw = nullptr;
    check(symvqc_vqe_run(c.get(), &opts, &raw));
    std::unique_ptr<symvqc_vqe_result, VqeDeleter> r(raw);
    char *csv = nullptr;
    check(symvqc_vqe_result_csv(r.get(), &csv));
    write_atomically(a.out, take(csv));
    manifest.write(a.out, {a.out});
    const double ref = symvqc_vqe_result_reference_energy(r.get());
    double final_mean = 0.0;
    const std::size_t trials = symvqc_vqe_result_trials(r.get());
    for (std::size_t k = 0; k < trials; ++k) {
        final_mean += symvqc_vqe_result_trial_final_energy(r.get(), k) - ref;
    }
    final_mean /= static_cast<double>(trials);
    char line[256];
    std::snprintf(line, sizeof line,
                  "reference_energy=%.10f best_energy=%.10f final_mean_delta_e=%.10g trace_final_mean_delta_e=%.10g\n",
                  ref, symvqc_vqe_result_best_energy(r.get()), final_mean,
                  symvqc_vqe_result_final_mean_delta(r.get()));
    std::cout << line;
    return kExitOk;
}

int run_verify(const std::string &suite) {
    char *report = nullptr;
    int passed = 0;
    check(symvqc_verify(suite.c_str(), &report, &passed));
    std::cout << take(report);
    std::cout << (passed ? "verify: all checks passed\n" : "verify: FAILED\n");
    return passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"symvqc: particle-number-conserving variational circuits"};
    app.set_version_flag("--version", std::string(symvqc_version()));
    app.require_subcommand(1);

    BuildArgs build;
    auto *build_cmd = app.add_subcommand("build", "Build an ansatz circuit and write it as JSON");
    build_cmd->add_option("--sites", build.sites, "Number of sites (qubits)");
    build_cmd->add_option("--particles", build.particles, "Number of particles");
    build_cmd->add_option("--gate", build.gate, "Two-qubit gate")->check(CLI::IsMember({"a", "b"}));
    build_cmd->add_option("--variant", build.variant, "Circuit layout")
        ->check(CLI::IsMember({"brickwall", "swap24"}));
    build_cmd->add_option("--out", build.out, "Output circuit file")->required();

    FidelityArgs fid;
    auto *fid_cmd = app.add_subcommand("fidelity", "Maximize fidelity with random sector targets");
    fid_cmd->add_option("--circuit", fid.circuit, "Circuit JSON file")->required();
    fid_cmd->add_option("--targets", fid.targets, "Number of target states");
    fid_cmd->add_option("--seed", fid.seed, "Random seed");
    fid_cmd->add_option("--target-source", fid.source, "haar or circuit")
        ->check(CLI::IsMember({"haar", "circuit"}));
    fid_cmd->add_option("--max-iterations", fid.max_iterations, "Objective evaluations per start");
    fid_cmd->add_option("--starts", fid.starts, "Random starts per target");
    fid_cmd->add_option("--out", fid.out, "Output CSV file")->required();

    VqeArgs vqe;
    auto *vqe_cmd = app.add_subcommand("vqe", "Run VQE trials on a lattice model");
    vqe_cmd->add_option("--circuit", vqe.circuit, "Circuit JSON file")->required();
    vqe_cmd->add_option("--model", vqe.model, "Model")->check(CLI::IsMember({"xxz"}));
    vqe_cmd->add_option("--gamma", vqe.gamma, "Anisotropy");
    vqe_cmd->add_option("--boundary", vqe.boundary, "open or periodic")
        ->check(CLI::IsMember({"open", "periodic"}));
    vqe_cmd->add_option("--estimator", vqe.estimator, "exact or shots:N");
    vqe_cmd->add_option("--noise", vqe.noise, "p1,p2,pro depolarizing and readout probabilities");
    vqe_cmd->add_option("--trajectories", vqe.trajectories, "Noise trajectories per evaluation");
    vqe_cmd->add_option("--trials", vqe.trials, "Independent trials");
    vqe_cmd->add_option("--seed", vqe.seed, "Base seed (trial k uses seed + k)");
    vqe_cmd->add_option("--optimizer", vqe.optimizer, "nelder-mead or spsa")
        ->check(CLI::IsMember({"nelder-mead", "spsa"}));
    vqe_cmd->add_option("--max-iterations", vqe.max_iterations, "Objective evaluations per start");
    vqe_cmd->add_option("--starts", vqe.starts, "Random starts per trial");
    vqe_cmd->add_option("--out", vqe.out, "Output CSV file")->required();

    std::string suite = "all";
    auto *verify_cmd = app.add_subcommand("verify", "Run the built-in invariant checks");
    verify_cmd->add_option("--suite", suite, "gates, symmetry, mapping or all")
        ->check(CLI::IsMember({"gates", "symmetry", "mapping", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*build_cmd) {
            return run_build(build);
        }
        if (*fid_cmd) {
            return run_fidelity(fid);
        }
        if (*vqe_cmd) {
            return run_vqe(vqe);
        }
        return run_verify(suite);
    } catch (const std::exception &e) {
        std::cerr << "symvqc: " << e.what() << "\n";
        return kExitUsage;
    }
}
