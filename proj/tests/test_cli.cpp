#include "schubert_fk/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace schubert_fk;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell; returns exit status and stdout.
std::pair<int, std::string> shell(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + SCHUBERT_FK_CLI + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, p)) out.append(buf, got);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

const std::filesystem::path golden_dir = std::filesystem::path(SCHUBERT_FK_SOURCE_DIR) / "tests" / "golden";

} // namespace

TEST(Cli, SchubertPolynomial) {
    auto r = run({"schubert", "--perm", "1 3 2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x1 + x2\n");
    r = run({"schubert", "--perm", "2 1", "--format", "json"});
    EXPECT_EQ(r.out, "{\"x1\":1}\n");
}

TEST(Cli, StructureConstants) {
    auto r = run({"lr", "--u", "2 1 3", "--v", "1 3 2", "--n", "3"});
    EXPECT_EQ(r.code, 0);
    auto j = json::parse(r.out);
    EXPECT_EQ(j["3 1 2"], 1);
    EXPECT_EQ(j["2 3 1"], 1);
}

TEST(Cli, GromovWitten) {
    auto r = run({"gw", "--u", "2 1", "--v", "2 1", "--n", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out), json::parse(R"({"1 2":{"q1":1}})"));
}

TEST(Cli, HookExpandSmallest) {
    auto r = run({"hook-expand", "--s", "1", "--t", "1", "--k", "1", "--n", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[{\"word\":\"[(1,2)]\",\"coeff\":1}]\n");
    r = run({"hook-expand", "--s", "1", "--t", "1", "--k", "1", "--n", "2", "--format", "tsv"});
    EXPECT_EQ(r.out, "word\tcoeff\n[(1,2)]\t1\n");
}

TEST(Cli, EBasis) {
    auto r = run({"ebasis", "--perm", "1 3 2", "--n", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out)["(0,1)"], 1);
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"schubert"}).code, 2);
    EXPECT_EQ(run({"hook-expand", "--s", "0", "--t", "1", "--k", "1", "--n", "2"}).code, 2);
    EXPECT_EQ(run({"hook-expand", "--s", "3", "--t", "1", "--k", "1", "--n", "2"}).code, 2);
    EXPECT_EQ(run({"schubert", "--perm", "1 1 2"}).code, 2);
    EXPECT_EQ(run({"lr", "--u", "4 3 2 1", "--v", "1", "--n", "3"}).code, 2);
    EXPECT_EQ(run({"ledger", "--a", "1", "--b", "2", "--k", "1", "--n", "5"}).code, 2);
    EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
    EXPECT_EQ(run({"twobytwo", "--k", "2", "--n", "4", "--format", "xml"}).code, 2);
    auto r = run({"bogus"});
    EXPECT_FALSE(r.err.empty());
}

TEST(Cli, HelpExitsZero) {
    auto r = run({"--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("hook-expand"), std::string::npos);
}

TEST(Cli, VerifyExitStatus) {
    auto ok = run({"verify", "--suite", "schur", "--max-n", "4"});
    EXPECT_EQ(ok.code, 0);
    std::istringstream lines(ok.out);
    int count = 0;
    for (std::string line; std::getline(lines, line); ++count) {
        auto j = json::parse(line);
        EXPECT_EQ(j["claim"], "grassmannian-schur");
        EXPECT_TRUE(j["pass"].get<bool>());
        EXPECT_FALSE(j.contains("seconds"));
    }
    EXPECT_EQ(count, 3);
    auto timed = run({"verify", "--suite", "schur", "--max-n", "2", "--timing"});
    EXPECT_TRUE(json::parse(timed.out).contains("seconds"));
    auto bad = run({"verify", "--suite", "mutation", "--max-n", "4"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_FALSE(json::parse(bad.out)["counterexample"].is_null());
}

TEST(Cli, BinaryExitCodes) {
    EXPECT_EQ(shell("twobytwo --k 2 --n 4").first, 0);
    EXPECT_EQ(shell("twobytwo --k 2").first, 2);
    EXPECT_EQ(shell("verify --suite mutation --max-n 4").first, 1);
}

TEST(Cli, ThreadCapDoesNotChangeOutput) {
    auto one = shell("verify --suite hook --max-n 4", "SCHUBERT_FK_THREADS=1");
    auto many = shell("verify --suite hook --max-n 4", "SCHUBERT_FK_THREADS=8");
    EXPECT_EQ(one.first, 0);
    EXPECT_EQ(one.second, many.second);
}

TEST(Cli, RepeatRunsAreByteIdentical) {
    auto a = shell("rect-expand --kind columns --count 2 --k 2 --n 4");
    auto b = shell("rect-expand --kind columns --count 2 --k 2 --n 4");
    EXPECT_EQ(a, b);
}

// Each golden file holds the argument line, a blank line, then the expected stdout.
// Set SCHUBERT_FK_UPDATE_GOLDEN=1 to rewrite the expected parts.
TEST(Cli, GoldenFiles) {
    const std::vector<std::string> subs{"schubert", "lr",        "gw",      "hook-expand", "rect-expand",
                                        "twobytwo", "ledger",    "forests", "ebasis",      "verify"};
    bool update = std::getenv("SCHUBERT_FK_UPDATE_GOLDEN") != nullptr;
    for (const auto& sub : subs) {
        auto path = golden_dir / (sub + ".golden");
        std::string text = slurp(path);
        ASSERT_FALSE(text.empty()) << path;
        auto split = text.find("\n\n");
        ASSERT_NE(split, std::string::npos) << path;
        std::string args = text.substr(0, split);
        auto [code, out] = shell(args);
        EXPECT_EQ(code, 0) << args;
        if (update) {
            std::ofstream(path, std::ios::binary) << args << "\n\n" << out;
            continue;
        }
        EXPECT_EQ(out, text.substr(split + 2)) << args;
    }
}
