#include "doctest.h"
#include "helpers.hpp"
#include "ravel/invariants.hpp"

using namespace ravel;

// Jones values below are the standard tables rewritten with t = A^-4.
TEST_CASE("jones of small knots") {
    // right-handed trefoil: t + t^3 - t^4
    CHECK(jones(test::full_pd(test::numerator({3}))).str() == "-16:-1 -12:1 -4:1");
    CHECK(jones(test::full_pd(test::numerator({-3}))).str() == "4:1 12:1 16:-1");
    // figure eight: t^-2 - t^-1 + 1 - t + t^2
    CHECK(jones(test::full_pd(test::numerator({2, 2}))).str() == "-8:1 -4:-1 0:1 4:-1 8:1");
    CHECK(jones(test::full_pd(test::numerator({0, 1}))).str() == "0:1");
}

TEST_CASE("jones of the hopf link up to orientation") {
    const std::string j = jones(test::full_pd(test::numerator({2}))).str();
    CHECK((j == "-10:-1 -2:-1" || j == "2:-1 10:-1"));
}

TEST_CASE("unlinks") {
    CHECK(unlink_jones(1).str() == "0:1");
    CHECK(unlink_jones(2).str() == "-2:-1 2:-1");
    CHECK(unlink_jones(3) == unlink_jones(2) * unlink_jones(2));
}

TEST_CASE("determinants of two-bridge links") {
    CHECK(determinant(test::full_pd(test::numerator({3}))) == 3);
    CHECK(determinant(test::full_pd(test::numerator({2, 2}))) == 5);
    CHECK(determinant(test::full_pd(test::numerator({2, 3}))) == 7);
    CHECK(determinant(test::full_pd(test::numerator({3, 2}))) == 7);
    CHECK(determinant(test::full_pd(test::numerator({2}))) == 2);
    CHECK(determinant(test::full_pd(test::numerator({0, 1}))) == 1);
}

TEST_CASE("pd text") {
    const PDCode t = parse_pd("# trefoil\nX 1 5 2 4\nX 3 1 4 6\nX 5 3 6 2\n");
    CHECK(t.size() == 3);
    CHECK(t.components == 1);
    CHECK(std::abs(writhe(t)) == 3);
    CHECK(parse_pd(to_text(t)).crossings == t.crossings);
    CHECK(determinant(t) == 3);
    const PDCode o = parse_pd("O\nO\n");
    CHECK(o.size() == 0);
    CHECK(o.components == 2);
    CHECK(jones(o) == unlink_jones(2));
    CHECK_THROWS(parse_pd("X 1 2 3\n"));
    CHECK_THROWS(parse_pd("X 1 1 1 1\n"));
}

TEST_CASE("kink factor") {
    // a single curl on the unknot: bracket -A^3 or -A^-3, jones 1
    const PDCode k = normalize_pd({{1, 2, 2, 1}}, 0);
    const LaurentPoly b = kauffman_bracket(k);
    CHECK(b.span() == 0);
    CHECK(std::abs(b.min_exp()) == 3);
    CHECK(b.coeff(b.min_exp()) == -1);
    CHECK(jones(k).str() == "0:1");
    CHECK(kauffman_bracket_state_sum(k) == b);
}

TEST_CASE("state sum agrees with the recursion") {
    for (auto boxes : std::vector<std::vector<int>>{{3}, {2, 2}, {2, 3}, {1, 2, 1}, {-3, -1}, {2}}) {
        const PDCode pd = test::full_pd(test::numerator(boxes));
        CHECK(kauffman_bracket(pd) == kauffman_bracket_state_sum(pd));
    }
}

TEST_CASE("bracket cap") {
    const PDCode pd = test::full_pd(test::numerator({2, 3}));
    CHECK_THROWS_AS(kauffman_bracket_state_sum(pd, 4), std::length_error);
}

TEST_CASE("triviality oracle") {
    CHECK(is_trivial(test::full_pd(test::numerator({3})), 1) == Triviality::Nontrivial);
    CHECK(is_trivial(test::full_pd(test::numerator({0, 1})), 1) == Triviality::Trivial);
    CHECK(is_trivial(test::full_pd(test::numerator({0, 2})), 1) == Triviality::Trivial);  // N(1/2) is an unknot
    CHECK(is_trivial(test::full_pd(test::numerator({2})), 2) == Triviality::Nontrivial);
}

TEST_CASE("diagram shape predicates") {
    const PDCode trefoil = test::full_pd(test::numerator({3}));
    CHECK(is_alternating(trefoil));
    CHECK(is_reduced(trefoil));
    CHECK(is_connected_diagram(trefoil));
    const PDCode kink = normalize_pd({{1, 2, 2, 1}}, 0);
    CHECK_FALSE(is_reduced(kink));
    CHECK_FALSE(is_connected_diagram(parse_pd("O\nO\n")));
}

TEST_CASE("laurent arithmetic") {
    const LaurentPoly a = LaurentPoly::monomial(2, -3) + LaurentPoly::monomial(-1, 4);
    CHECK(a.str() == "-3:2 4:-1");
    CHECK(LaurentPoly::parse(a.str()) == a);
    CHECK((a - a).is_zero());
    CHECK((a * LaurentPoly(1)) == a);
    CHECK(a.reflected().str() == "-4:-1 3:2");
    CHECK(pow(LaurentPoly::monomial(1, 2), 3).str() == "6:1");
    CHECK(LaurentPoly().str() == "0");
}
