#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "cli.hpp"

namespace {

struct Run {
    int code = 0;
    std::string out, err;
};

std::string sample(const std::string& name) { return std::string(FK_SAMPLES_DIR) + "/" + name; }

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "fk_cli");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Run r;
    r.code = fk::cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

// Runs the installed binary through the shell and returns (exit status, stdout).
std::pair<int, std::string> run_binary(const std::string& args) {
    const std::string cmd = std::string(FK_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 256> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe)) out += buf.data();
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

} // namespace

TEST(Cli, Validate) {
    auto r = run({"validate", sample("two_interior.sht")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "valid k=3 n=7 m=3 n0=2 pi=2,2,1,1,1,1,1\n");
    r = run({"validate", sample("overlapping.sht")});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "EdgeOverlapTooLarge")) << r.err;
    r = run({"validate", sample("triangle.sht")});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "ContainsCycle")) << r.err;
    r = run({"validate", sample("malformed.sht")});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "ParseError")) << r.err;
    r = run({"validate", sample("missing.sht")});
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, Eigen) {
    auto r = run({"eigen", sample("star_d2.sht")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("lambda=2.000000000000\ngap=inf\nvertex_id,is_interior,f_value\n", 0), 0u);
    r = run({"--format", "plain", "eigen", sample("two_interior.sht")});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "vertex_id  is_interior  f_value")) << r.out;
    r = run({"eigen", sample("single_edge.sht")});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "NoInteriorVertices"));
}

TEST(Cli, SloCommands) {
    auto r = run({"slo-check", sample("two_edge_path.sht"), "--order", "2,0,1,3,4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "slo=true\n");
    r = run({"slo-check", sample("two_edge_path.sht"), "--order", "2,0,3,1,4"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(contains(r.out, "slo=false\nS4: 0 3 1 (edge 0)\n")) << r.out;
    r = run({"slo-check", sample("two_edge_path.sht"), "--order", "2,0,1"});
    EXPECT_EQ(r.code, 2);

    r = run({"slo-find", sample("two_interior.sht")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("order ", 0), 0u);
    r = run({"slo-find", sample("non_slo.sht")});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "slo=false\n");

    r = run({"slo-construct", "--k", "3", "--pi", "2,2,1,1,1,1,1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "k 3\nn 7\ne 0 1 2\ne 0 3 4\ne 1 5 6\n# order 0 1 2 3 4 5 6\n");
    r = run({"slo-construct", "--k", "3", "--pi", "2,2,2,1,1,1,1,1,1,1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "InfeasibleDegreeSequence"));
}

TEST(Cli, Relabel) {
    const auto r = run({"relabel", sample("star_d2.sht")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("vertex_id,s,i,p,f_value\n0,0,1,1,1.000000000000\n", 0), 0u) << r.out;
}

TEST(Cli, Transforms) {
    auto r = run({"switch", sample("two_interior.sht"), "--e1", "1", "--e2", "2", "--u1", "3", "--v1", "5"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "# weak=true strict=false lambda_before=1.500000000000 lambda_after=1.500000000000\n")) << r.out;
    r = run({"switch", sample("two_interior.sht"), "--e1", "1", "--e2", "2", "--u1", "3"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "InvalidSpec"));

    r = run({"shift", sample("star_d3.sht"), "--u", "0", "--edges", "2", "--v", "1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "e 1 5 6\n")) << r.out;
    EXPECT_TRUE(contains(r.out, "# weak=true strict=true lambda_before=3.000000000000")) << r.out;
    r = run({"shift", sample("star_d2.sht"), "--u", "0", "--edges", "0,1", "--v", "5"});
    EXPECT_EQ(r.code, 2);

    r = run({"unit", "--k", "3", "--pi", "3,3,3,1,1,1,1,1,1,1,1,1,1,1,1", "--p", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "pi=2,3,4,1,1,1,1,1,1,1,1,1,1,1,1\n");
    r = run({"unit", "--k", "3", "--pi", "2,2,1,1,1,1,1", "--p", "0"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "DegreeTooSmall"));
}

TEST(Cli, Enumerate) {
    auto r = run({"enumerate", "--k", "3", "--n", "9"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("canonical_code,degree_sequence\n", 0), 0u);
    EXPECT_TRUE(contains(r.out, "count=4\n"));
    r = run({"--jobs", "3", "enumerate", "--k", "3", "--pi", "2,2,2,1,1,1,1,1,1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, ",2 2 2 1 1 1 1 1 1\n"));
    EXPECT_TRUE(contains(r.out, "count=2\n"));
    r = run({"enumerate", "--k", "3"});
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, Verification) {
    auto r = run({"verify-fk1", "--k", "3", "--pi", "2,2,1,1,1,1,1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "unique=true slo_match=true\n"));
    r = run({"verify-fk2", "--n", "13", "--n0", "3", "--k", "3", "--d", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "family=n=13,n0=3,k=3,d=2 unique=true slo_match=true\n")) << r.out;
    r = run({"verify-fk2", "--n", "4", "--n0", "1", "--k", "3", "--d", "2"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(contains(r.err, "EmptyFamily"));
}

TEST(Cli, Majorize) {
    auto r = run({"majorize", "--k", "3", "--pi", "3,3,1,1,1,1,1,1,1,1,1", "--pi-prime", "2,4,1,1,1,1,1,1,1,1,1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(contains(r.out, "majorized=true\nchain=0\n")) << r.out;
    EXPECT_TRUE(contains(r.out, "monotone=true\n"));
    r = run({"majorize", "--k", "3", "--pi", "2,4,1,1,1,1,1,1,1,1,1", "--pi-prime", "3,3,1,1,1,1,1,1,1,1,1"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "majorized=false\n");
}

TEST(Cli, RandomIsSeeded) {
    const auto a = run({"--seed", "7", "random", "--k", "3", "--m", "6"});
    const auto b = run({"--seed", "7", "random", "--k", "3", "--m", "6"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(fk::io::parse_supertree(a.out).size(), 6);
}

TEST(Cli, UsageErrors) {
    for (const auto& args : std::vector<std::vector<std::string>>{{}, {"nonsense"}, {"eigen"}, {"--format", "xml", "eigen", sample("star_d2.sht")},
                                                                   {"unit", "--k", "3", "--pi", "3,3,1", "--p", "zero"}}) {
        const auto r = run(args);
        EXPECT_EQ(r.code, 2);
        EXPECT_EQ(r.err.rfind("UsageError: ", 0), 0u) << r.err;
        EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
    }
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliBinary, ExitCodes) {
    auto [code, out] = run_binary("eigen " + sample("star_d2.sht"));
    EXPECT_EQ(code, 0);
    EXPECT_EQ(out.rfind("lambda=2.000000000000\n", 0), 0u);
    std::tie(code, out) = run_binary("verify-fk1 --k 3 --pi 2,2,1,1,1,1,1");
    EXPECT_EQ(code, 0);
    EXPECT_TRUE(contains(out, "unique=true slo_match=true"));
    EXPECT_EQ(run_binary("validate " + sample("overlapping.sht")).first, 2);
    EXPECT_EQ(run_binary("validate " + sample("malformed.sht")).first, 2);
    EXPECT_EQ(run_binary("slo-find " + sample("non_slo.sht")).first, 1);
    EXPECT_EQ(run_binary("--bogus").first, 2);
}
