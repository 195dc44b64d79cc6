#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "fk/fk.hpp"

using namespace fk;
using namespace fixture;

namespace {

ErrorCode parse_error_of(const std::string& text) {
    try {
        io::parse_supertree(text);
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "parsed: " << text;
    return ErrorCode::InvalidSpec;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST(ParseSupertree, Basic) {
    const auto g = io::parse_supertree("k 3\nn 5\ne 0 1 2\ne 0 3 4\n");
    EXPECT_EQ(g, star(3, 2));
}

TEST(ParseSupertree, CommentsAndWhitespace) {
    const auto g = io::parse_supertree("# star\n\nk   3\n  n 5 \n# edges follow\ne 4 3 0\n\ne\t2 1 0\n");
    EXPECT_EQ(g, star(3, 2));
}

TEST(ParseSupertree, Errors) {
    EXPECT_EQ(parse_error_of(""), ErrorCode::ParseError);
    EXPECT_EQ(parse_error_of("n 5\nk 3\ne 0 1 2\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error_of("k 3\nn 3\ne 0 1 two\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error_of("k 3\nn 3\nedge 0 1 2\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error_of("k 3 4\nn 3\ne 0 1 2\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error_of("k 3\nn 3x\ne 0 1 2\n"), ErrorCode::ParseError);
    EXPECT_EQ(parse_error_of("k 3\n"), ErrorCode::ParseError);
    // well-formed text describing an invalid supertree reports the structural error
    EXPECT_EQ(parse_error_of("k 3\nn 5\ne 0 1 2\ne 1 2 3\n"), ErrorCode::EdgeOverlapTooLarge);
    EXPECT_EQ(parse_error_of("k 3\nn 5\ne 0 1 2\n"), ErrorCode::Disconnected);
    EXPECT_EQ(parse_error_of("k 3\nn 3\n"), ErrorCode::Disconnected);
    EXPECT_EQ(parse_error_of("k 3\nn 5\ne 0 1 2\ne 0 3\n"), ErrorCode::NotKUniform);
}

TEST(Serialize, RoundTrip) {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_supertree(2 + static_cast<int>(rng() % 4), 1 + static_cast<int>(rng() % 9), rng);
        const auto text = io::serialize(g);
        const auto h = io::parse_supertree(text);
        EXPECT_EQ(h, g);
        EXPECT_EQ(io::serialize(h), text);
    }
}

TEST(Serialize, CanonicalSampleFilesAreByteIdentical) {
    for (const char* name : {"star_d2.sht", "star_d3.sht", "two_interior.sht", "single_edge.sht", "path_k2.sht", "two_edge_path.sht", "non_slo.sht"}) {
        std::string text = slurp(std::filesystem::path(FK_SAMPLES_DIR) / name);
        // drop leading comment lines, which the writer does not produce
        while (text.rfind('#', 0) == 0) text.erase(0, text.find('\n') + 1);
        EXPECT_EQ(io::serialize(io::parse_supertree(text)), text) << name;
    }
}

TEST(Serialize, Format) {
    EXPECT_EQ(io::serialize(path_k2()), "k 2\nn 3\ne 0 1\ne 1 2\n");
}

TEST(Ordering, ParseAndSerialize) {
    EXPECT_EQ(io::parse_ordering("order 2 0 1").order, (std::vector<VertexId>{2, 0, 1}));
    EXPECT_EQ(io::parse_ordering("2,0,1").order, (std::vector<VertexId>{2, 0, 1}));
    EXPECT_EQ(io::parse_ordering(" 2, 0 ,1 ").order, (std::vector<VertexId>{2, 0, 1}));
    EXPECT_EQ(io::serialize(VertexOrdering{{2, 0, 1}}), "order 2 0 1\n");
    EXPECT_EQ(io::parse_ordering(io::serialize(VertexOrdering{{4, 3, 2, 1, 0}})).order, (std::vector<VertexId>{4, 3, 2, 1, 0}));
    EXPECT_THROW(io::parse_ordering(""), Error);
    EXPECT_THROW(io::parse_ordering("order"), Error);
    EXPECT_THROW(io::parse_ordering("0 1 x"), Error);
}

TEST(Reports, Fixed12) {
    EXPECT_EQ(io::fixed12(2.0), "2.000000000000");
    EXPECT_EQ(io::fixed12(1.0 / 3.0), "0.333333333333");
}

TEST(Reports, EigenReport) {
    const auto g = star(3, 2);
    const auto report = io::eigen_report(g, first_dirichlet_eigenpair(g));
    EXPECT_EQ(report,
              "lambda=2.000000000000\n"
              "gap=inf\n"
              "vertex_id,is_interior,f_value\n"
              "0,1,1.000000000000\n"
              "1,0,0.000000000000\n"
              "2,0,0.000000000000\n"
              "3,0,0.000000000000\n"
              "4,0,0.000000000000\n");
    const auto r2 = io::eigen_report(two_interior(), first_dirichlet_eigenpair(two_interior()));
    EXPECT_NE(r2.find("lambda=1.500000000000\ngap=1.000000000000\n"), std::string::npos);
    EXPECT_NE(r2.find("\n0,1,0.707106781187\n"), std::string::npos);
}

TEST(Reports, RelabelReport) {
    const auto g = star(3, 2);
    const auto ep = first_dirichlet_eigenpair(g);
    const auto report = io::relabel_report(relabel(g, ep.f), ep.f);
    EXPECT_EQ(report.substr(0, report.find('\n', report.find('\n') + 1) + 1), "vertex_id,s,i,p,f_value\n0,0,1,1,1.000000000000\n");
}

TEST(Reports, Certificate) {
    const auto cert = verify_fk_theorem1(seq(3, with_ones({2, 2}, 5)));
    EXPECT_EQ(io::certificate_summary(cert), "family=pi=(2,2,1,1,1,1,1),k=3 unique=true slo_match=true");
    const auto report = io::certificate_report(cert);
    EXPECT_EQ(report.rfind("canonical_code,lambda,is_winner,is_slo\n", 0), 0u);
    EXPECT_NE(report.find(",1.500000000000,true,true\n"), std::string::npos);
    EXPECT_EQ(report.substr(report.size() - io::certificate_summary(cert).size() - 1), io::certificate_summary(cert) + "\n");
}
