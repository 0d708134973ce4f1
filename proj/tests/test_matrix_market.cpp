#include <gtest/gtest.h>

#include <fstream>
#include <string>

#include <gcur/matrix_market.hpp>
#include <gcur/random.hpp>

using namespace gcur;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = ::testing::TempDir() + "/" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST(MatrixMarket, ArrayRoundTripIsBitExact) {
    const DenseMatrix m = gaussian(9, 6, 500).dense();
    const std::string path = ::testing::TempDir() + "/rt.mtx";
    write_matrix_market(path, m);
    EXPECT_EQ(read_matrix_market(path), m);
}

TEST(MatrixMarket, ArrayIsColumnMajorOnDisk) {
    const std::string path = write_temp("cm.mtx",
                                        "%%MatrixMarket matrix array real general\n"
                                        "2 2\n1\n3\n2\n4\n");
    const DenseMatrix m = read_matrix_market(path);
    EXPECT_EQ(m(0, 0), 1.0);
    EXPECT_EQ(m(1, 0), 3.0);
    EXPECT_EQ(m(0, 1), 2.0);
    EXPECT_EQ(m(1, 1), 4.0);
}

TEST(MatrixMarket, CoordinateFormat) {
    const std::string path = write_temp("coord.mtx",
                                        "%%MatrixMarket matrix coordinate real general\n"
                                        "% a comment\n"
                                        "3 4 2\n"
                                        "1 1 2.5\n"
                                        "3 4 -1\n");
    const DenseMatrix m = read_matrix_market(path);
    ASSERT_EQ(m.rows(), 3u);
    ASSERT_EQ(m.cols(), 4u);
    EXPECT_EQ(m(0, 0), 2.5);
    EXPECT_EQ(m(2, 3), -1.0);
    EXPECT_EQ(m(1, 1), 0.0);
}

TEST(MatrixMarket, MalformedHeaderReportsLine) {
    const std::string path = write_temp("bad1.mtx", "not a banner\n1 1\n0\n");
    try {
        read_matrix_market(path);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
    }
}

TEST(MatrixMarket, ErrorPaths) {
    EXPECT_THROW(read_matrix_market("/nonexistent/x.mtx"), InputError);
    EXPECT_THROW(
        read_matrix_market(write_temp("bad2.mtx",
                                      "%%MatrixMarket matrix array complex general\n1 1\n0\n")),
        ParseError);
    EXPECT_THROW(
        read_matrix_market(write_temp(
            "bad3.mtx", "%%MatrixMarket matrix array real symmetric\n2 2\n1\n2\n3\n")),
        ParseError);
    EXPECT_THROW(
        read_matrix_market(write_temp("bad4.mtx",
                                      "%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n")),
        ParseError);  // missing entry
    EXPECT_THROW(
        read_matrix_market(write_temp(
            "bad5.mtx",
            "%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 5.0\n")),
        ParseError);  // row index out of range
    EXPECT_THROW(
        read_matrix_market(write_temp(
            "bad6.mtx", "%%MatrixMarket matrix array real general\n2 2\n1\nfoo\n3\n4\n")),
        ParseError);  // non-numeric entry
}

TEST(MatrixMarketSource, HeaderOnlyConstructionAndStreaming) {
    const DenseMatrix m = gaussian(11, 5, 501).dense();
    const std::string path = ::testing::TempDir() + "/src.mtx";
    write_matrix_market(path, m);

    MatrixMarketSource src(path);
    EXPECT_EQ(src.rows(), 11u);
    EXPECT_EQ(src.cols(), 5u);
    EXPECT_EQ(src.pass_count(), 0u);

    DenseMatrix rebuilt(11, 5);
    src.stream_pass(4, [&](std::size_t r0, const DenseMatrix& blk) {
        for (std::size_t j = 0; j < blk.cols(); ++j)
            for (std::size_t i = 0; i < blk.rows(); ++i) rebuilt(r0 + i, j) = blk(i, j);
    });
    EXPECT_EQ(rebuilt, m);
    EXPECT_EQ(src.pass_count(), 1u);
}

TEST(MatrixMarket, IntegerFieldAccepted) {
    const std::string path = write_temp("int.mtx",
                                        "%%MatrixMarket matrix coordinate integer general\n"
                                        "2 2 2\n1 1 7\n2 2 -3\n");
    const DenseMatrix m = read_matrix_market(path);
    EXPECT_EQ(m(0, 0), 7.0);
    EXPECT_EQ(m(1, 1), -3.0);
}
