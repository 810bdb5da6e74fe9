#include <doctest.h>

#include "coins/errors.hpp"
#include "coins/rational.hpp"

using namespace coins;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3") == rat(3));
    CHECK(parse_rational("-7") == rat(-7));
    CHECK(parse_rational("11/10") == rat(11, 10));
    CHECK(parse_rational("-2/4") == rat(-1, 2));
    CHECK(parse_rational("+6/4") == rat(3, 2));
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("rational formatting is canonical") {
    CHECK(format_rational(rat(4, 2)) == "2");
    CHECK(format_rational(rat(-4, 8)) == "-1/2");
    CHECK(format_rational(rat(0)) == "0");
    CHECK(format_rational(parse_rational("22/7")) == "22/7");
}
