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

// Drives the installed command-line tool as a subprocess.

#include <json.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string &args) {
    const std::string cmd = std::string(SYMVQC_CLI_PATH) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 512> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double field(const std::string &text, const std::string &key) {
    const std::regex re(key + "=([-+0-9.eE]+)");
    std::smatch m;
    if (!std::regex_search(text, m, re)) return std::nan("");
    return std::stod(m[1]);
}

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("symvqc_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, BuildPrintsCounts) {
    auto r = run("build --sites 4 --particles 2 --gate a --out " + path("a.json"));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "gates=6 params=10 cnots=18\n");
    r = run("build --variant swap24 --gate a --out " + path("s.json"));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "gates=5 params=10 cnots=27\n");
}

TEST_F(Cli, BuildRejectsImpossibleSector) {
    EXPECT_NE(run("build --sites 2 --particles 3 --out " + path("x.json")).exit_code, 0);
    EXPECT_FALSE(fs::exists(path("x.json")));
    EXPECT_NE(run("build --sites 4 --particles 2 --gate q --out " + path("x.json")).exit_code, 0);
    EXPECT_NE(run("build --sites 4 --particles 2").exit_code, 0);
}

TEST_F(Cli, BuildWritesManifestAndIsDeterministic) {
    ASSERT_EQ(run("build --sites 4 --particles 2 --gate b --out " + path("b1.json")).exit_code, 0);
    ASSERT_EQ(run("build --sites 4 --particles 2 --gate b --out " + path("b2.json")).exit_code, 0);
    EXPECT_EQ(slurp(path("b1.json")), slurp(path("b2.json")));
    const auto m = nlohmann::json::parse(slurp(path("b1.json") + ".manifest.json"));
    EXPECT_EQ(m["schema"], "symvqc-manifest/1");
    EXPECT_EQ(m["command"], "build");
    EXPECT_EQ(m["flags"]["gate"], "b");
    EXPECT_TRUE(m.contains("version"));
    EXPECT_TRUE(m["wall_clock_seconds"].is_number());
    EXPECT_EQ(m["outputs"][0], path("b1.json"));
}

TEST_F(Cli, FidelityOnSelfGeneratedTarget) {
    ASSERT_EQ(run("build --sites 4 --particles 2 --gate a --out " + path("c.json")).exit_code, 0);
    const auto r = run("fidelity --circuit " + path("c.json") +
                       " --targets 1 --target-source circuit --seed 3 --out " + path("f.csv"));
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NEAR(field(r.out, "mean_fidelity"), 1.0, 1e-6);
    EXPECT_EQ(slurp(path("f.csv")).rfind("target,fidelity\n", 0), 0U);
    EXPECT_TRUE(fs::exists(path("f.csv") + ".manifest.json"));
}

TEST_F(Cli, MalformedCircuitFileFails) {
    std::ofstream(path("bad.json")) << "{\"num_qubits\": 4, \"ops\": [";
    EXPECT_NE(run("fidelity --circuit " + path("bad.json") + " --out " + path("f.csv")).exit_code, 0);
    EXPECT_NE(run("vqe --circuit " + path("bad.json") + " --out " + path("v.csv")).exit_code, 0);
    EXPECT_NE(run("vqe --circuit " + path("missing.json") + " --out " + path("v.csv")).exit_code, 0);
}

TEST_F(Cli, VqeExactReachesReferenceEnergy) {
    ASSERT_EQ(run("build --sites 4 --particles 2 --gate b --out " + path("c.json")).exit_code, 0);
    const auto r = run("vqe --circuit " + path("c.json") +
                       " --model xxz --gamma 1 --estimator exact --trials 20 --max-iterations 1000 --seed 0 --out " +
                       path("v.csv"));
    ASSERT_EQ(r.exit_code, 0);
    EXPECT_NEAR(field(r.out, "reference_energy"), -6.4641, 1e-3);
    EXPECT_NEAR(field(r.out, "best_energy"), -6.4641, 1e-3);
}

TEST_F(Cli, VqeShotsAreSeedReproducible) {
    ASSERT_EQ(run("build --sites 4 --particles 2 --gate a --out " + path("c.json")).exit_code, 0);
    const std::string base = "vqe --circuit " + path("c.json") + " --estimator shots:1024 --trials 2 --max-iterations 40 ";
    ASSERT_EQ(run(base + "--seed 9 --out " + path("r1.csv")).exit_code, 0);
    ASSERT_EQ(run(base + "--seed 9 --out " + path("r2.csv")).exit_code, 0);
    ASSERT_EQ(run(base + "--seed 10 --out " + path("r3.csv")).exit_code, 0);
    EXPECT_EQ(slurp(path("r1.csv")), slurp(path("r2.csv")));
    EXPECT_NE(slurp(path("r1.csv")), slurp(path("r3.csv")));
}

TEST_F(Cli, ZeroNoiseMatchesNoiseless) {
    ASSERT_EQ(run("build --sites 4 --particles 2 --gate b --out " + path("c.json")).exit_code, 0);
    const std::string base = "vqe --circuit " + path("c.json") + " --trials 2 --max-iterations 60 --seed 4 ";
    ASSERT_EQ(run(base + "--out " + path("clean.csv")).exit_code, 0);
    ASSERT_EQ(run(base + "--noise 0,0,0 --out " + path("zero.csv")).exit_code, 0);
    EXPECT_EQ(slurp(path("clean.csv")), slurp(path("zero.csv")));
}

TEST_F(Cli, VqeRejectsInvalidFlags) {
    ASSERT_EQ(run("build --sites 4 --particles 2 --gate b --out " + path("c.json")).exit_code, 0);
    const std::string base = "vqe --circuit " + path("c.json") + " --out " + path("v.csv") + " ";
    EXPECT_NE(run(base + "--estimator shots:0").exit_code, 0);
    EXPECT_NE(run(base + "--estimator bogus").exit_code, 0);
    EXPECT_NE(run(base + "--noise 0.1,0.2").exit_code, 0);
    EXPECT_NE(run(base + "--noise 0,1.5,0").exit_code, 0);
    EXPECT_NE(run(base + "--model hubbard").exit_code, 0);
    EXPECT_NE(run(base + "--trials 0").exit_code, 0);
}

TEST_F(Cli, VerifySuites) {
    for (const char *suite : {"gates", "symmetry", "mapping", "all"}) {
        const auto r = run(std::string("verify --suite ") + suite);
        EXPECT_EQ(r.exit_code, 0) << suite << "\n" << r.out;
        EXPECT_NE(r.out.find("all checks passed"), std::string::npos);
    }
    EXPECT_NE(run("verify --suite nonsense").exit_code, 0);
}
