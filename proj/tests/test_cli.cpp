#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Invocation {
    int code;
    std::string out;
};

Invocation run(const std::string& args) {
    const std::string cmd = std::string(LVDER_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) out += buf.data();
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name) { return std::string(LVDER_TEST_DATA) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, DeriveSolid) {
    const Invocation r = run("derive " + data("solid5.txt"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, 7), "dim 20\n");
    EXPECT_TRUE(contains(r.out, "# map 20\n"));
}

TEST(Cli, DeriveFullyDashed) {
    const Invocation r = run("derive " + data("dashed5.txt"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "dim 0\n");
}

TEST(Cli, MalformedRationalIsInputError) {
    EXPECT_EQ(run("derive " + data("bad_rational.txt")).code, 2);
    EXPECT_EQ(run("derive " + data("missing.txt")).code, 2);
    EXPECT_EQ(run("derive").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, CheckVerdicts) {
    EXPECT_EQ(run("check " + data("solid5.txt") + " " + data("map_zero5.txt")).out, "PASS\n");
    EXPECT_EQ(run("check " + data("solid5.txt") + " " + data("map_diff5.txt")).out, "PASS\n");
    const Invocation fail = run("check " + data("dashed2.txt") + " " + data("map_e1_e2.txt"));
    EXPECT_EQ(fail.code, 1);
    EXPECT_EQ(fail.out, "FAIL witness (1,1)\n");
    EXPECT_EQ(run("check " + data("solid5.txt") + " " + data("map_e1_e2.txt")).code, 2);
}

TEST(Cli, DeriveOutputRoundTripsThroughCheck) {
    const auto dir = std::filesystem::temp_directory_path() / "lvder_cli_roundtrip";
    std::filesystem::remove_all(dir);
    ASSERT_EQ(run("derive " + data("single_edge.txt") + " --out-dir " + dir.string()).code, 0);
    std::size_t count = 0;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        ++count;
        EXPECT_EQ(run("check " + data("single_edge.txt") + " " + entry.path().string()).out, "PASS\n");
    }
    EXPECT_EQ(count, 8u);
    std::filesystem::remove_all(dir);
}

TEST(Cli, GraphReport) {
    const Invocation r = run("graph " + data("single_edge.txt"));
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "gamma 1\n"));
    EXPECT_TRUE(contains(r.out, "N_1 {1,3,4,5}\n"));
    EXPECT_TRUE(contains(r.out, "N_3 {3,4,5}\n"));
}

TEST(Cli, RulesExplain) {
    const Invocation r = run("rules --explain " + data("single_edge.txt"));
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "dashed {1,2}: |J|<=1, lambda(1,1)=0"));
    EXPECT_TRUE(contains(r.out, "rule gap 0\n"));
}

TEST(Cli, ClassifyDefaultAndLiteral) {
    const Invocation def = run("classify");
    EXPECT_EQ(def.code, 1);
    EXPECT_TRUE(contains(def.out, "M21 PASS dim 4 expected 4"));
    EXPECT_TRUE(contains(def.out, "M18 FAIL dim 0 expected 2"));
    EXPECT_TRUE(contains(def.out, "summary 21/22 PASS\n"));

    const Invocation lit = run("classify --literal-table --case M21");
    EXPECT_EQ(lit.code, 1);
    EXPECT_TRUE(contains(lit.out, "M21 FAIL"));
    EXPECT_TRUE(contains(lit.out, "missing kernel condition e_4"));

    const Invocation one = run("classify --case M21 --seeds 3,4");
    EXPECT_EQ(one.code, 0);
    EXPECT_TRUE(contains(one.out, "seeds: 3:4 4:4\n"));
    EXPECT_EQ(run("classify --case M99").code, 2);
    EXPECT_EQ(run("classify --seeds -1").code, 2);
}

TEST(Cli, JsonMode) {
    const Invocation r = run("--json classify --case M2");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "\"computed_dim\": 8"));
    EXPECT_TRUE(contains(r.out, "\"tau(1,2)\": \"1/3\""));
    const Invocation c = run("check --json " + data("dashed2.txt") + " " + data("map_e1_e2.txt"));
    EXPECT_TRUE(contains(c.out, "\"derivation\": false"));
}

TEST(Cli, Census) {
    const Invocation r = run("census");
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "classes 34\n"));
    EXPECT_TRUE(contains(r.out, "1 dashed - labelings 1 dim 20 cases M1\n"));
    EXPECT_EQ(run("census --n 6").code, 2);
}

TEST(Cli, OutputIndependentOfThreadCount) {
    setenv("LVDER_THREADS", "1", 1);
    const std::string classify = run("classify --seeds 0,1").out;
    const std::string census = run("census").out;
    for (const char* threads : {"3", "8"}) {
        setenv("LVDER_THREADS", threads, 1);
        EXPECT_EQ(run("classify --seeds 0,1").out, classify) << threads;
        EXPECT_EQ(run("census").out, census) << threads;
    }
    setenv("LVDER_THREADS", "0", 1);
    EXPECT_EQ(run("census").code, 2);
    unsetenv("LVDER_THREADS");
}
