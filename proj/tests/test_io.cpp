#include "lvder/io.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace lvder;
using lvder::testing::q;

namespace {

LVAlgebra read(const std::string& text, InputFormat f = InputFormat::Auto) {
    std::istringstream in(text);
    return read_algebra(in, "input", f);
}

std::string error_of(const std::string& text) {
    try {
        read(text);
    } catch (const std::exception& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(ReadAlgebra, MatrixWithComments) {
    const LVAlgebra a = read("# two vertices\n2\n\n1/2 1/3\n# row 2\n2/3 1/2\n");
    EXPECT_EQ(a.alpha(0, 1), q(1, 3));
}

TEST(ReadAlgebra, GraphDefaultsToSolid) {
    const LVAlgebra a = read("5\n2 1 2/3\n");
    EXPECT_EQ(a.alpha(0, 1), q(1, 3));
    EXPECT_EQ(gamma(a), 1u);
    EXPECT_EQ(gamma(read("4\n")), 0u);
}

TEST(ReadAlgebra, ThreeVertexAmbiguity) {
    EXPECT_EQ(gamma(read("3\n1 2 1/3\n")), 1u);
    EXPECT_EQ(gamma(read("3\n1/2 1/3 1/2\n2/3 1/2 1/2\n1/2 1/2 1/2\n")), 1u);
    EXPECT_EQ(gamma(read("3\n1 2 1/3\n2 3 1/4\n1 3 1/5\n", InputFormat::Graph)), 3u);
    EXPECT_THROW(read("3\n1 2 1/3\n", InputFormat::Matrix), ParseError);
}

TEST(ReadAlgebra, ErrorsCarryLineNumbers) {
    EXPECT_EQ(error_of("2\n1/2 1/0\n1/2 1/2\n"), "input:2: invalid rational '1/0': zero denominator");
    EXPECT_EQ(error_of("# c\n5\n1 1 1/3\n"), "input:3: self-loop at vertex 1");
    EXPECT_EQ(error_of("5\n1 6 1/3\n"), "input:2: vertex 6 out of range 1..5");
    EXPECT_EQ(error_of("5\n1 2 1/3\n2 1 2/3\n"), "input:3: pair {1,2} already given on line 2");
    EXPECT_EQ(error_of(""), "input: empty input, expected the dimension n");
    EXPECT_EQ(error_of("x\n"), "input:1: expected dimension, got 'x'");
    EXPECT_EQ(error_of("2\n1/2 1/2\n1/2\n"), "input:3: expected 2 entries, found 1");
    EXPECT_NE(error_of("2\n1/2 1/3\n1/3 1/2\n").find("alpha(1,2) + alpha(2,1) = 2/3"), std::string::npos);
}

TEST(LinearMapFile, RoundTrip) {
    RatMatrix m(3, 3);
    m(0, 1) = q(-1, 2);
    m(2, 0) = 5;
    const LinearMap d(m);
    std::stringstream buf;
    write_linear_map(buf, d);
    EXPECT_EQ(buf.str(), "3\n0 -1/2 0\n0 0 0\n5 0 0\n");
    EXPECT_EQ(read_linear_map(buf, "map"), d);
}

TEST(GraphFile, WriteThenRead) {
    const WeightedGraph g = WeightedGraph::from_edges(4, {{3, 1, q(1, 5)}, {0, 2, q(2, 7)}});
    std::stringstream buf;
    write_graph(buf, g);
    EXPECT_EQ(buf.str(), "4\n1 3 2/7\n2 4 4/5\n");
    EXPECT_EQ(graph_of(read_algebra(buf, "g")), g);
}
