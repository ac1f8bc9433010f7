#include "doctest.h"
#include "helpers.hpp"

using namespace ravel;

TEST_CASE("montesinos inputs") {
    const auto in = parse_input("M[[2,2],[0,1,2]] v(2,2,1)");
    REQUIRE(in.presentation.size() == 2);
    CHECK(in.presentation.summands[1] == BoxVector({0, 1, 2}));
    REQUIRE(in.insertion.addresses.size() == 1);
    CHECK(in.insertion.addresses[0] == CrossingAddress{2, 2, 1});
    CHECK_FALSE(in.is_algebraic());
    CHECK(parse_input(" M [ inf , [ -2 , -3 ] ] ").presentation.summands[0].is_infinity());
}

TEST_CASE("printing") {
    CHECK(print_input(parse_input("M[ [2,3] ,[1,2,2]]v(2,2,1)")) == "M[[2,3],[1,2,2]] v(2,2,1)");
    CHECK(print_input(parse_input("M[inf,inf]")) == "M[inf,inf]");
    CHECK(print_input(parse_input("A[[1]*[2]+[3]]")) == "A[[1]*[2]+[3]]");
    CHECK(print_input(parse_input("A[[1]*([2]+[3])]")) == "A[[1]*([2]+[3])]");
    CHECK(print_input(parse_input("A[[1]+([2]+[3])]")) == "A[[1]+([2]+[3])]");
}

TEST_CASE("parse errors carry a position") {
    auto pos = [](const char* s) {
        try {
            parse_input(s);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1L;
    };
    CHECK(pos("M[[2,x]]") == 5);
    CHECK(pos("M[[2,3]") == 7);
    CHECK(pos("Q") == 0);
    CHECK(pos("M[[2,3]] v(1,1)") >= 13);
    CHECK(pos("M[[2,3]] trailing") >= 9);
    CHECK(pos("M[[2,") >= 0);
    CHECK(pos("") == 0);
    CHECK(pos("M[[2,0,1]]") >= 0);  // empty interior box
}
