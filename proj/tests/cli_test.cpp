#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace narcissus {
namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "narcissus");
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NARCISSUS_DATA_DIR) + "/" + name; }

TEST(Cli, CountScnFour) {
    const auto r = run({"count", "scn", "--n", "4"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "8\n");
}

TEST(Cli, CountOtherKinds) {
    EXPECT_EQ(run({"count", "spn", "--n", "7"}).out, "162000\n");
    EXPECT_EQ(run({"count", "ssyt", "--n", "3"}).out, "8\n");
    EXPECT_EQ(run({"count", "narcissistic", "--n", "4"}).out, "1296\n");
    EXPECT_EQ(run({"count", "scn", "--n", "1001"}).status, 3);
    EXPECT_EQ(run({"count", "scn", "--n", "1"}).status, 2);
    EXPECT_EQ(run({"count", "bogus", "--n", "4"}).status, 2);
    EXPECT_EQ(run({"count", "scn"}).status, 2);
}

TEST(Cli, MapToSsyt) {
    const auto r = run({"map", "to-ssyt", data("example1.profile")});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "3\n1 1 1\n2 3\n3\n");
}

TEST(Cli, MapToProfile) {
    const auto r = run({"map", "to-profile", data("example1.tableau")});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "4\n1 2 3 4\n2 3 4 1\n3 2 4 1\n4 3 2 1\n");
    EXPECT_EQ(run({"map", "to-ssyt", data("modified.profile")}).status, 2);
}

TEST(Cli, CheckModifiedProfileIsNotSingleCrossing) {
    const auto r = run({"check", data("modified.profile"), "--property", "sc"});
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out, "FAIL: not single-crossing; delta-subprofile: pairs {1,4},{2,3}; voters 1,2,3,4\n");
}

TEST(Cli, CheckPasses) {
    EXPECT_EQ(run({"check", data("example1.profile")}).out, "PASS: single-peaked; axis 1,2,3,4\n");
    EXPECT_EQ(run({"check", data("example1.profile"), "--property", "scn"}).out,
              "PASS: single-crossing; axis 1,2,3,4\n");
    EXPECT_EQ(run({"check", data("example1.profile"), "--property", "narcissistic"}).status, 0);
    EXPECT_EQ(run({"check", data("modified.profile"), "--property", "spn"}).status, 0);
}

TEST(Cli, CheckWithAxis) {
    EXPECT_EQ(run({"check", data("example1.profile"), "--axis", "4,3,2,1"}).status, 0);
    const auto r = run({"check", data("example1.profile"), "--axis", "2,1,3,4"});
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out, "FAIL: not single-peaked; violated along axis 2,1,3,4\n");
    EXPECT_EQ(run({"check", data("example1.profile"), "--axis", "1,2,3"}).status, 2);
    EXPECT_EQ(run({"check", data("example1.profile"), "--axis", "1,1,2,3"}).status, 2);
}

TEST(Cli, CheckCondorcet) {
    const auto r = run({"check", data("condorcet.profile")});
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out, "FAIL: not single-peaked; worst-subprofile: alternatives 1,2,3; voters 1,2,3\n");
    const auto n = run({"check", data("condorcet.profile"), "--property", "narcissistic"});
    EXPECT_EQ(n.status, 1);
    EXPECT_EQ(n.out, "FAIL: not narcissistic; voter 1 has peak 2\n");
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).status, 2);
    EXPECT_EQ(run({"check"}).status, 2);
    EXPECT_EQ(run({"check", data("missing.profile")}).status, 2);
    EXPECT_EQ(run({"check", data("example1.profile"), "--property", "xx"}).status, 2);
    EXPECT_EQ(run({"frobnicate"}).status, 2);
    EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, ParseErrorsExitTwoWithLocation) {
    const auto r = run({"map", "to-profile", data("example1.profile")});
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("line"), std::string::npos);
}

TEST(Cli, Canonicalize) {
    const auto r = run({"canonicalize", data("example1.profile")});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "# relabeling 1->1 2->2 3->3 4->4\n4\n1 2 3 4\n2 3 4 1\n3 2 4 1\n4 3 2 1\n");
    EXPECT_EQ(run({"canonicalize", data("condorcet.profile")}).status, 2);
}

TEST(Cli, EnumerateSsyt) {
    const auto r = run({"enumerate", "ssyt", "--n", "2"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "2\n1 1\n2\n\n2\n1 2\n2\n");
    EXPECT_EQ(run({"enumerate", "scn", "--n", "6", "--count-only"}).out, "1024\n");
    EXPECT_EQ(run({"enumerate", "spn", "--n", "5", "--count-only", "--limit", "10"}).out, "10\n");
    EXPECT_EQ(run({"enumerate", "spn", "--n", "9"}).status, 3);
    EXPECT_EQ(run({"enumerate", "spn", "--n", "9", "--limit", "1", "--count-only"}).out, "1\n");
    EXPECT_EQ(run({"enumerate", "scn", "--n", "4", "--limit", "0"}).out, "");
}

TEST(Cli, EnumerateIsByteStable) {
    EXPECT_EQ(run({"enumerate", "spn", "--n", "5"}).out, run({"enumerate", "spn", "--n", "5"}).out);
}

TEST(Cli, Verify) {
    const auto r = run({"verify", "--n", "4", "--oracle"});
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_NE(r.out.find("PASS  oracle-scn"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(run({"verify", "--n", "8"}).status, 3);
    EXPECT_EQ(run({"verify", "--n", "6", "--oracle"}).status, 3);
}

}  // namespace
}  // namespace narcissus
