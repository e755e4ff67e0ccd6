#include "doctest.h"

#include <random>
#include <sstream>

#include "frobq/text.hpp"
#include "test_util.hpp"

using namespace frobq;
using testutil::rand_quad;

TEST_SUITE("text") {

TEST_CASE("parse_element accepts the element grammar") {
    CHECK(parse_element("1+1r") == QuadInt(1, 1));
    CHECK(parse_element("2r") == QuadInt(0, 2));
    CHECK(parse_element("-3+0r") == QuadInt(-3, 0));
    CHECK(parse_element("7") == QuadInt(7, 0));
    CHECK(parse_element("-7") == QuadInt(-7, 0));
    CHECK(parse_element("+7") == QuadInt(7, 0));
    CHECK(parse_element("r") == QuadInt(0, 1));
    CHECK(parse_element("-r") == QuadInt(0, -1));
    CHECK(parse_element("-2r") == QuadInt(0, -2));
    CHECK(parse_element("4-2r") == QuadInt(4, -2));
    CHECK(parse_element("3+r") == QuadInt(3, 1));
    CHECK(parse_element("3-r") == QuadInt(3, -1));
    CHECK(parse_element("0") == QuadInt(0, 0));
    CHECK(parse_element("  12  ") == QuadInt(12, 0));
    CHECK(parse_element("\t5+6r\n") == QuadInt(5, 6));
    CHECK(parse_element("123456789012345678901234567890r") ==
          QuadInt(0, Int("123456789012345678901234567890")));
}

TEST_CASE("parse_element rejects everything else") {
    CHECK_THROWS_AS(parse_element(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("   "), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("xyz"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("-"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("--3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("1+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("1+2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("1r+3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("2rr"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("1 + 1r"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("0x5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("1+1r junk"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("r2"), std::invalid_argument);

    // The error names what it choked on.
    try {
        parse_element("xyz");
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("xyz") != std::string::npos);
    }
}

TEST_CASE("format_element fixed values") {
    CHECK(format_element(QuadInt(1, 1)) == "1+1r");
    CHECK(format_element(QuadInt(0, 2)) == "2r");
    CHECK(format_element(QuadInt(0, -2)) == "-2r");
    CHECK(format_element(QuadInt(-3, 0)) == "-3");
    CHECK(format_element(QuadInt(4, -2)) == "4-2r");
    CHECK(format_element(QuadInt(0, 0)) == "0");
    CHECK(format_element(QuadInt(0, 1)) == "1r");
    CHECK(format_element(QuadInt(-4, -5)) == "-4-5r");
}

TEST_CASE("stream output matches format_element") {
    std::ostringstream os;
    os << QuadInt(4, -2) << " " << QuadInt(0, 0);
    CHECK(os.str() == "4-2r 0");
}

TEST_CASE("parse round-trips format") {
    std::mt19937_64 rng(60601);
    for (int i = 0; i < 2000; ++i) {
        QuadInt x = rand_quad(rng, -1000000000L, 1000000000L);
        if (i % 7 == 0) {
            x.rat = 0;
        }
        if (i % 11 == 0) {
            x.irr = 0;
        }
        CHECK(parse_element(format_element(x)) == x);
    }
}

}  // TEST_SUITE
