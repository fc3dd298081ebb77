#include "secdom/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace secdom {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "secdom");
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    std::filesystem::path dir;

    void SetUp() override {
        dir = std::filesystem::temp_directory_path() /
              ("secdom_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        std::filesystem::create_directories(dir);
    }
    void TearDown() override { std::filesystem::remove_all(dir); }

    std::string write(const std::string& name, const std::string& text) {
        auto p = dir / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

TEST_F(CliTest, ClassifyC5) {
    auto r = run({"classify", write("c5.g6", "Dhc\n")});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("p5-free: yes"), std::string::npos);
    EXPECT_NE(r.out.find("c5-free: no"), std::string::npos);
}

TEST_F(CliTest, SolveGammaS) {
    auto r = run({"solve", write("c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n"), "--what", "gamma-s"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "3\nwitness: 0 1 2\n");
}

TEST_F(CliTest, ConstructWithTrace) {
    auto r = run({"construct", write("c5.g6", "Dhc"), "--class", "p5-free", "--trace"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("set: 0 2 4\n"), std::string::npos);
    EXPECT_NE(r.out.find("bound: 3.0\n"), std::string::npos);
    EXPECT_NE(r.out.find("certified: yes\n"), std::string::npos);
    EXPECT_NE(r.out.find("  i=2 v=1 u=0 x=4 |S|=3 |A|=0\n"), std::string::npos);
}

TEST_F(CliTest, ConstructOutsideClassIsUsageError) {
    auto r = run({"construct", write("p5.txt", "5 4\n0 1\n1 2\n2 3\n3 4\n"), "--class", "p5-free"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("not p5-free"), std::string::npos);
    EXPECT_EQ(run({"construct", write("c5.g6", "Dhc"), "--class", "p9-free"}).code, kExitUsage);
}

TEST_F(CliTest, MalformedInputAndMissingFile) {
    EXPECT_EQ(run({"classify", write("bad.txt", "3 2\n0 1\n")}).code, kExitUsage);
    EXPECT_EQ(run({"classify", (dir / "missing").string()}).code, kExitUsage);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
}

TEST_F(CliTest, Generate) {
    EXPECT_EQ(run({"generate", "--family", "cycle", "--n", "5"}).out, "Dhc\n");
    EXPECT_EQ(run({"generate", "--family", "path", "--n", "3", "--format", "edge-list"}).out,
              "3 2\n0 1\n1 2\n");
    auto a = run({"generate", "--family", "random", "--n", "9", "--patterns", "P5,C4", "--seed", "3"});
    auto b = run({"generate", "--family", "random", "--n", "9", "--patterns", "P5,C4", "--seed", "3"});
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run({"generate", "--family", "buoy", "--sizes", "1,1"}).code, kExitUsage);
    EXPECT_EQ(run({"generate", "--family", "random", "--n", "5", "--patterns", "Q9"}).code, kExitUsage);
}

TEST_F(CliTest, VerifyBoundsAndBench) {
    auto v = run({"verify-bounds", "--class", "p3up2-free", "--nmax", "4"});
    EXPECT_EQ(v.code, kExitOk);
    EXPECT_NE(v.out.find("failures 0"), std::string::npos);
    EXPECT_EQ(run({"verify-bounds", "--class", "p5-free", "--nmax", "9"}).code, kExitUsage);

    const std::string csv = (dir / "bench.csv").string();
    EXPECT_EQ(run({"bench", "--out", csv, "--exact-limit", "10"}).code, kExitOk);
    std::ifstream in(csv);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "class,instance,n,alpha,gamma_s_exact,constructed_size,bound,within_bound,runtime_ms");
}

}  // namespace
}  // namespace secdom
