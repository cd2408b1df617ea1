#include <gtest/gtest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using json = nlohmann::json;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string& args) {
    const std::string cmd = std::string(TUBEHALL_CLI) + " " + args + " 2>/dev/null";
    Result r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST(Cli, BracketPrintsResidues) {
    const auto r = run("bracket --variant cluster --x 1 --y -1 --q 3");
    ASSERT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    // -z + u_2 - u_-2 with coefficients in Z/2
    EXPECT_EQ(j["z"], 1);
    EXPECT_EQ(j["u"], (json{{"2", 1}, {"-2", 1}}));
    EXPECT_EQ(j["meta"]["max_index"], 8);
}

TEST(Cli, BracketAtQ5KeepsSigns) {
    const auto j = json::parse(run("bracket --x 1 --y -1 --q 5").out);
    EXPECT_EQ(j["z"], 3);
    EXPECT_EQ(j["u"], (json{{"2", 1}, {"-2", 3}}));
    const auto k = json::parse(run("bracket --x z --y 3 --q 5").out);
    // [z, u_3] = 4 u_3 = 0 mod 4
    EXPECT_TRUE(k["u"].empty());
    EXPECT_EQ(k["z"], 0);
}

TEST(Cli, VerifyConstantsRoot) {
    const auto r = run("verify-constants --variant root --q 5 --max 4");
    EXPECT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_TRUE(j["mismatches"].empty());
    EXPECT_EQ(j["checked"], 81);
}

TEST(Cli, Classify) {
    auto j = json::parse(run("classify --w 2 --n 2 --a 1 --b 1 --field q").out);
    EXPECT_EQ(j["equivalent"], true);
    EXPECT_EQ(j["c"], 1);
    j = json::parse(run("classify --w 2 --n 3 --a 1 --b 1 --field q").out);
    EXPECT_EQ(j["equivalent"], false);
    j = json::parse(run("classify --w 2 --n 3 --a 1 --b 1 --field p2").out);
    EXPECT_EQ(j["equivalent"], true);
    EXPECT_EQ(run("classify --w 2 --n 2 --a 0 --b 1 --field q").code, 2);
    EXPECT_EQ(run("classify --w 2 --n 2 --field p4").code, 2);
}

TEST(Cli, HallSplit) {
    const auto j = json::parse(run("hall --variant cluster --q 3 --x 4 --l 3 --y 3").out);
    EXPECT_EQ(j["S2"].get<int>() % 2, 0);
    EXPECT_GT(j["S2"].get<int>(), 0);
    EXPECT_EQ(j["F"], 0);
}

TEST(Cli, CoverAndDot) {
    auto r = run("cover --d 3 --n 6");
    EXPECT_EQ(r.code, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["m"], 3);
    EXPECT_EQ(j["ok"], true);
    r = run("cover --d -1 --n 2 --window 3 --dot");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("digraph cover", 0), 0u);
    r = run("ar-quiver --w 3 --n 2 --height 3 --dot");
    EXPECT_EQ(r.out.rfind("digraph ar_quiver", 0), 0u);
    const auto s = json::parse(run("ar-quiver --w 3 --n 2").out);
    EXPECT_EQ(s["tubes"], 2);
    EXPECT_EQ(s["rank"], 1);
}

TEST(Cli, QuotientAndHeisenberg) {
    auto r = run("quotient --max 10 --closed");
    EXPECT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_TRUE(j["mismatches"].empty());
    r = run("heisenberg --max 6");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["ok"], true);
}

TEST(Cli, FlagErrors) {
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("bracket --x 1").code, 2);
    EXPECT_EQ(run("bracket --x 1 --y 0").code, 2);
    EXPECT_EQ(run("hall --x 1 --l 1 --y 1 --q 2").code, 2);
    EXPECT_EQ(run("hall --x 1 --l 1 --y 1 --variant tube").code, 2);
    EXPECT_EQ(run("bracket --x 9 --y 1").code, 2);
    EXPECT_EQ(run("cover --d 0 --n 2").code, 2);
}

TEST(Cli, Deterministic) {
    const auto a = run("bracket --x 2 --y 1 --q 5").out;
    EXPECT_EQ(a, run("bracket --x 2 --y 1 --q 5").out);
}
