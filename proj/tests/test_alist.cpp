#include "doctest.h"

#include "bitflip/alist.hpp"
#include "bitflip/constructions.hpp"

using namespace bitflip;

TEST_CASE("identity round trip") {
    const std::string text =
        "3 3\n"
        "1 1\n"
        "1 1 1\n"
        "1 1 1\n"
        "1\n"
        "2\n"
        "3\n"
        "1\n"
        "2\n"
        "3\n";
    const BinaryMatrix h = parse_alist(text);
    CHECK(h == BinaryMatrix::identity(3));
    CHECK(write_alist(h) == text);
}

TEST_CASE("write then parse is the identity on constructed matrices") {
    for (const BinaryMatrix& h : {projective_plane(4), euclidean_punctured(3),
                                  hamming_circulant(4), simplex_weight3_matrix(4),
                                  to_matrix(fig1_instance().first)}) {
        const std::string text = write_alist(h);
        const BinaryMatrix back = parse_alist(text);
        CHECK(back == h);
        CHECK(write_alist(back) == text);  // byte-exact round trip
    }
}

TEST_CASE("padding with zeros parses") {
    // irregular matrix: row weights 2 and 1, column weights 1/1/1
    const std::string text =
        "3 2\n"
        "1 2\n"
        "1 1 1\n"
        "2 1\n"
        "1\n"
        "1\n"
        "2\n"
        "1 2\n"
        "3 0\n";
    const BinaryMatrix h = parse_alist(text);
    CHECK(h.rows() == 2);
    CHECK(h.cols() == 3);
    CHECK(h.get(0, 0));
    CHECK(h.get(0, 1));
    CHECK(h.get(1, 2));
}

TEST_CASE("truncated file names the failing line") {
    const std::string text =
        "3 3\n"
        "1 1\n"
        "1 1 1\n"
        "1 1 1\n"
        "1\n"
        "2\n";
    CHECK_THROWS_WITH_AS(parse_alist(text), doctest::Contains("line 7"), Error);
}

TEST_CASE("malformed inputs are rejected with the offending line") {
    // bad dimension count
    CHECK_THROWS_WITH_AS(parse_alist("3\n"), doctest::Contains("line 1"), Error);
    // column weight exceeding cmax
    CHECK_THROWS_WITH_AS(parse_alist("2 2\n1 1\n2 1\n1 1\n1 2\n2\n1\n2\n"),
                         doctest::Contains("line 3"), Error);
    // out-of-range row index
    CHECK_THROWS_WITH_AS(parse_alist("2 2\n1 1\n1 1\n1 1\n3\n2\n1\n2\n"),
                         doctest::Contains("out of range"), Error);
    // column list inconsistent with row list
    const std::string inconsistent =
        "2 2\n"
        "1 1\n"
        "1 1\n"
        "1 1\n"
        "1\n"
        "2\n"
        "2\n"  // row 1 claims column 2, but column lists say column 1
        "1\n";
    CHECK_THROWS_WITH_AS(parse_alist(inconsistent), doctest::Contains("inconsistent"), Error);
    // column weight header says 1, the list carries 2 entries
    const std::string badweight =
        "2 2\n"
        "2 2\n"
        "1 1\n"
        "2 1\n"
        "1 2\n"
        "1 0\n"
        "1 2\n"
        "1 0\n";
    CHECK_THROWS_WITH_AS(parse_alist(badweight), doctest::Contains("mismatch"), Error);
    // trailing garbage on a line
    CHECK_THROWS_WITH_AS(parse_alist("2 2 x\n"), doctest::Contains("unexpected token"), Error);
}

TEST_CASE("file round trip") {
    const BinaryMatrix h = projective_plane(2);
    const std::string path = "/tmp/bitflip_test_fano.alist";
    write_alist_file(path, h);
    CHECK(read_alist_file(path) == h);
    CHECK_THROWS_AS(read_alist_file("/tmp/definitely_missing_bitflip.alist"), Error);
}
