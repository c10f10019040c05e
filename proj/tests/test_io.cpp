#include <gtest/gtest.h>

#include "heavycycle/generators.hpp"
#include "heavycycle/heavy_cycle.hpp"
#include "heavycycle/io.hpp"
#include "support/fixtures.hpp"

using namespace heavycycle;
namespace ht = heavycycle::testing;

namespace {

Error parse_error(std::string_view text) {
    try {
        parse_edge_list(text);
    } catch (const Error& e) {
        return e;
    }
    ADD_FAILURE() << "parsed: " << text;
    return Error(ErrorCode::Internal, "no error");
}

}  // namespace

TEST(EdgeList, Parse) {
    const auto g = parse_edge_list("# triangle\n3 3\n0 1 1\n\n1 2 1.0\n2 0 1e0\n");
    EXPECT_EQ(g, ht::unit_triangle());

    const auto loop = parse_edge_list("1 1\n0 0 1\n");
    EXPECT_TRUE(loop.has_loop(0));

    const auto crlf = parse_edge_list("2 2\r\n0 1 0.5\r\n1 0\t0.5\r\n");
    EXPECT_EQ(crlf.arc_count(), 2u);
}

TEST(EdgeList, Errors) {
    const auto neg = parse_error("2 2\n0 1 -0.5\n1 0 1\n");
    EXPECT_EQ(neg.code(), ErrorCode::NegativeWeight);
    EXPECT_EQ(neg.line(), std::optional<std::size_t>(2));

    const auto dup = parse_error("2 2\n0 1 0.5\n0 1 0.5\n");
    EXPECT_EQ(dup.code(), ErrorCode::DuplicateArc);
    EXPECT_EQ(dup.line(), std::optional<std::size_t>(3));

    EXPECT_EQ(parse_error("2 1\n0 2 0.5\n").code(), ErrorCode::ParseError);
    EXPECT_EQ(parse_error("2 2\n0 1 0.5\n").code(), ErrorCode::ParseError);
    EXPECT_EQ(parse_error("2 1\n0 1 x\n").code(), ErrorCode::ParseError);
    EXPECT_EQ(parse_error("2 1\n0 1 0.5 7\n").code(), ErrorCode::ParseError);
    EXPECT_EQ(parse_error("2\n").code(), ErrorCode::ParseError);
    EXPECT_EQ(parse_error("").code(), ErrorCode::ParseError);
    EXPECT_EQ(parse_error("1 1\n0 0 nan\n").code(), ErrorCode::ParseError);
}

TEST(EdgeList, NegativeZeroStoredAsZero) {
    const auto g = parse_edge_list("2 2\n0 1 -0\n0 0 1\n");
    EXPECT_FALSE(std::signbit(*g.weight(0, 1)));
}

TEST(EdgeListProperty, RoundTrip) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto g = seed % 2 ? gen_normalized_random(1 + seed % 12, 1, seed) : gen_layered_sink(2 + seed % 3, seed);
        EXPECT_EQ(parse_edge_list(write_edge_list(g)), g);
    }
}

TEST(CertificateText, RoundTrip) {
    const auto cert = find_heavy_cycle(ht::overwrite_triangle());
    const std::string text = write_certificate(cert);
    EXPECT_NE(text.find("cycle 0 1 2 0\n"), std::string::npos);
    EXPECT_NE(text.find("valid true\n"), std::string::npos);
    const auto back = parse_certificate(text);
    EXPECT_EQ(back.cycle.vertices, cert.cycle.vertices);
    EXPECT_EQ(back.achieved, cert.achieved);
    EXPECT_EQ(back.n, cert.n);
    EXPECT_EQ(back.r, cert.r);
    EXPECT_NEAR(back.bound, cert.bound, 1e-10);
    EXPECT_TRUE(back.valid);
}

TEST(CertificateText, Errors) {
    EXPECT_THROW(parse_certificate("n 3\nr 0\nbound 1\nachieved 2\nvalid true\n"), Error);
    EXPECT_THROW(parse_certificate("n 3\nr 0\nbound 1\nachieved 2\nvalid yes\ncycle 0 1 0\n"), Error);
    EXPECT_THROW(parse_certificate("n 3\nr 0\nbound 1\nachieved 2\nvalid true\ncycle 0 1 2\n"), Error);
    EXPECT_THROW(parse_certificate("n 3\nr 0\nbound 1\nachieved 2\nvalid true\ncycle 0 1 0\ncolor red\n"), Error);
    const auto loop = parse_certificate("n 1\nr 1\nbound 1\nachieved 1\nvalid true\ncycle 0 0\n");
    EXPECT_EQ(loop.cycle.vertices, (std::vector<VertexId>{0}));
}
