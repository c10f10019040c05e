#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int status = -1;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("heavycycle_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p;
    }

    Outcome run(const std::string& args, const std::string& env = {}) {
        const fs::path out = dir_ / "stdout.txt";
        const fs::path err = dir_ / "stderr.txt";
        const std::string cmd = env + " '" HEAVYCYCLE_CLI_PATH "' " + args + " >'" + out.string() + "' 2>'" +
                                err.string() + "'";
        const int raw = std::system(cmd.c_str());
        Outcome r;
        r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
        r.out = slurp(out);
        r.err = slurp(err);
        return r;
    }

    fs::path dir_;
};

const char* kOverwriteTriangle = "3 5\n0 2 0.3\n0 1 0.7\n1 2 0.5\n1 0 0.5\n2 0 1.0\n";

}  // namespace

TEST_F(Cli, FindPrintsCertificate) {
    const auto g = write("triangle.txt", kOverwriteTriangle);
    const Outcome r = run("find " + g.string());
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("cycle 0 1 2 0"), std::string::npos);
    EXPECT_NE(r.out.find("valid true"), std::string::npos);
}

TEST_F(Cli, FindTraceGoesToStderr) {
    const auto g = write("triangle.txt", kOverwriteTriangle);
    const Outcome r = run("find --trace --scc every-step " + g.string());
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.err.find("contract z=0 y=2"), std::string::npos);
    EXPECT_NE(r.err.find("contract z=1 y=0"), std::string::npos);
    EXPECT_EQ(r.out.find("contract"), std::string::npos);
}

TEST_F(Cli, CheckRoundTrip) {
    const auto g = write("triangle.txt", kOverwriteTriangle);
    const Outcome found = run("find " + g.string());
    const auto cert = write("cert.txt", found.out);
    const Outcome ok = run("check " + g.string() + " " + cert.string());
    EXPECT_EQ(ok.status, 0) << ok.out;
    EXPECT_NE(ok.out.find("ok"), std::string::npos);

    std::string tampered = found.out;
    tampered.replace(tampered.find("cycle 0 1 2 0"), 13, "cycle 0 2 1 0");
    const auto bad = write("bad.txt", tampered);
    const Outcome rejected = run("check " + g.string() + " " + bad.string());
    EXPECT_EQ(rejected.status, 4);
    EXPECT_NE(rejected.out.find("rejected"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
    const auto neg = write("neg.txt", "2 2\n0 1 1\n1 0 -1\n");
    const Outcome parse = run("find " + neg.string());
    EXPECT_EQ(parse.status, 1);
    EXPECT_NE(parse.err.find("line 3"), std::string::npos);

    const auto light = write("light.txt", "2 2\n0 1 1\n1 0 0.5\n");
    const Outcome pre = run("find " + light.string());
    EXPECT_EQ(pre.status, 2);
    EXPECT_NE(pre.err.find("vertex 1"), std::string::npos);

    EXPECT_EQ(run("find " + (dir_ / "missing.txt").string()).status, 1);

    const auto dag = write("dag.txt", "2 1\n0 1 1\n");
    EXPECT_EQ(run("oracle " + dag.string()).status, 2);
}

TEST_F(Cli, OracleCap) {
    std::string k5 = "5 20\n";
    for (int u = 0; u < 5; ++u) {
        for (int v = 0; v < 5; ++v) {
            if (u != v) k5 += std::to_string(u) + " " + std::to_string(v) + " 1\n";
        }
    }
    const auto g = write("k5.txt", k5);
    const Outcome full = run("oracle " + g.string());
    EXPECT_EQ(full.status, 0);
    EXPECT_NE(full.out.find("weight 5"), std::string::npos);
    EXPECT_EQ(run("oracle --cap 10 " + g.string()).status, 3);
    EXPECT_EQ(run("oracle " + g.string(), "HEAVYCYCLE_ORACLE_CAP=10").status, 3);
    EXPECT_EQ(run("oracle --cap 1000 " + g.string(), "HEAVYCYCLE_ORACLE_CAP=10").status, 0);
}

TEST_F(Cli, GenThenFind) {
    const auto out = dir_ / "gen.txt";
    const Outcome gen = run("gen --family normalized --n 30 --k 3 --seed 4 --out " + out.string());
    ASSERT_EQ(gen.status, 0) << gen.err;
    const Outcome again = run("gen --family normalized --n 30 --k 3 --seed 4");
    EXPECT_EQ(again.out, slurp(out));
    EXPECT_EQ(run("find " + out.string()).status, 0);
    EXPECT_EQ(run("gen --family nope").status, 1);
}

TEST_F(Cli, BenchCsv) {
    const Outcome r = run("bench --family loopheavy --n 4,6 --param 0.3 --seeds 2 --jobs 1");
    ASSERT_EQ(r.status, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) ++count;
    EXPECT_EQ(count, 5u);
    EXPECT_EQ(r.out.rfind("family,n,r,seed,", 0), 0u);
}
