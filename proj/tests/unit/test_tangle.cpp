#include <set>

#include "doctest.h"
#include "ravel/catalog.hpp"
#include "ravel/tangle.hpp"

using namespace ravel;

namespace {
Fraction F(std::int64_t p, std::int64_t q) { return Fraction::make(p, q); }
}  // namespace

// values worked out by hand from the continued fraction
TEST_CASE("continued fractions") {
    CHECK(fraction(BoxVector({2, 3})) == F(7, 3));
    CHECK(fraction(BoxVector({3, 2})) == F(7, 2));
    CHECK(fraction(BoxVector({3})) == F(3, 1));
    CHECK(fraction(BoxVector({0, 2})) == F(1, 2));
    CHECK(fraction(BoxVector({1, 1, 1})) == F(3, 2));
    CHECK(fraction(BoxVector({2, 2})) == F(5, 2));
    CHECK(fraction(BoxVector({0, 1, 2})) == F(2, 3));
    CHECK(fraction(BoxVector({-2, -3})) == F(-7, 3));
    CHECK(fraction(BoxVector({0})) == F(0, 1));
    CHECK(fraction(BoxVector::infinity()).is_infinity());
}

TEST_CASE("fraction normal form") {
    CHECK(F(6, -4) == F(-3, 2));
    CHECK(F(0, 5) == F(0, 1));
    CHECK(F(3, 0).is_infinity());
    CHECK(F(7, 3).str() == "7/3");
    CHECK(F(4, 1).is_integer());
}

TEST_CASE("parity from fraction") {
    CHECK(parity_from_fraction(F(0, 1)) == Parity::Zero);
    CHECK(parity_from_fraction(F(2, 1)) == Parity::Zero);
    CHECK(parity_from_fraction(F(2, 3)) == Parity::Zero);
    CHECK(parity_from_fraction(Fraction::infinity()) == Parity::Infinity);
    CHECK(parity_from_fraction(F(7, 2)) == Parity::Infinity);
    CHECK(parity_from_fraction(F(1, 2)) == Parity::Infinity);
    CHECK(parity_from_fraction(F(7, 3)) == Parity::One);
    CHECK(parity_from_fraction(F(3, 1)) == Parity::One);
}

TEST_CASE("traced parity on small tangles") {
    CHECK(parity(BoxVector({2, 3})) == Parity::One);
    CHECK(parity(BoxVector({3, 2})) == Parity::Infinity);
    CHECK(parity(BoxVector({2})) == Parity::Zero);
    CHECK(parity(BoxVector({0})) == Parity::Zero);
    CHECK(parity(BoxVector::infinity()) == Parity::Infinity);
}

TEST_CASE("box vector validation") {
    CHECK_THROWS_AS(BoxVector(std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(BoxVector({2, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(BoxVector({2, -1}), std::invalid_argument);
    CHECK_NOTHROW(BoxVector({0, 3, 1}));
    CHECK(BoxVector({0, 3, 1}).crossing_count() == 4);
    CHECK(BoxVector({-2, -1}).sign() == -1);
    CHECK(BoxVector({2, 1}).mirrored() == BoxVector({-2, -1}));
}

TEST_CASE("standard form") {
    using K = ViolationKind;
    CHECK(validate_standard_form({{BoxVector({2, 3}), BoxVector({2, 3})}}).valid());
    CHECK(validate_standard_form({{BoxVector({3})}}).valid());  // n = 1 may be an integer

    auto one = [](const MontesinosPresentation& m) { return validate_standard_form(m).violations.at(0).kind; };
    CHECK(one({}) == K::Empty);
    CHECK(one({{BoxVector({3}), BoxVector({2, 3})}}) == K::HorizontalSummand);
    CHECK(one({{BoxVector({0}), BoxVector({2, 3})}}) == K::TrivialSummand);
    CHECK(one({{BoxVector::infinity(), BoxVector::infinity()}}) == K::TrivialSummand);
}

TEST_CASE("catalog box vectors") {
    const auto all = catalog_box_vectors(3);
    // one representative per fraction
    std::set<Fraction> seen;
    for (const auto& b : all) CHECK(seen.insert(fraction(b)).second);
    // fractions reachable with at most three crossings, by hand:
    // 0, ±1, ±2, ±3, ±1/2, ±1/3, ±3/2, ±2/3
    CHECK(all.size() == 15);
    CHECK(catalog_box_vectors(0).size() == 1);
}
