#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "ravel/moves.hpp"
#include "ravel/rewrite.hpp"

using namespace ravel;

TEST_CASE("closure of a rational tangle untwists to nothing") {
    const Diagram v = vertex_closure(build_tangle_diagram(BoxVector({2, 3})));
    CHECK_FALSE(untwist_sites(v).empty());
    const auto r = planarity_search(v);
    REQUIRE(r.certified);
    CHECK(r.trace.initial_crossings == 5);
    CHECK(r.trace.final_crossings == 0);
    CHECK(r.final.crossing_count() == 0);
    CHECK(replay(v, r.trace).crossing_count() == 0);
    CHECK(r.steps_used >= static_cast<int>(r.trace.steps.size()));
}

TEST_CASE("trace text") {
    const Diagram v = vertex_closure(build_tangle_diagram(BoxVector({2})));
    const auto r = planarity_search(v);
    REQUIRE(r.certified);
    const std::string s = r.trace.str();
    CHECK(s.rfind("# crossings 2 -> 0", 0) == 0);
    CHECK(std::count(s.begin(), s.end(), '\n') == 1 + static_cast<long>(r.trace.steps.size()));
}

TEST_CASE("moves refuse bad sites") {
    const Diagram v = vertex_closure(build_tangle_diagram(BoxVector({2, 3})));
    RewriteStep bad;
    bad.move = RewriteMove::ReidemeisterI;
    bad.node = 0;
    CHECK_THROWS_AS(apply_move(v, bad), std::invalid_argument);
    bad.move = RewriteMove::UntwistAtVertex;
    bad.node = 999;
    bad.slot = 0;
    CHECK_THROWS_AS(apply_move(v, bad), std::invalid_argument);
}

TEST_CASE("budget is respected") {
    const Diagram v = vertex_closure(build_montesinos_diagram(test::M("M[[2,3],[2,3]]")));
    const auto r = planarity_search(v, 5);
    CHECK(r.steps_used <= 5);
}

TEST_CASE("a ravel is never certified planar") {
    const Diagram v = vertex_closure(build_montesinos_diagram(test::M("M[[2,3],[2,3]]")));
    CHECK_FALSE(planarity_search(v, 2000).certified);
}

TEST_CASE("flips keep the diagram planar and the crossing count") {
    const Diagram v = vertex_closure(build_montesinos_diagram(test::M("M[[2,3],[3,2]]")));
    const auto sites = flip_sites(v);
    CHECK_FALSE(sites.empty());
    for (const auto& s : sites) {
        const Diagram f = apply_move(v, s);
        CHECK(euler_check(f));
        CHECK(f.crossing_count() == v.crossing_count());
        const auto ball = flip_ball(v, s);
        CHECK(std::find(ball.begin(), ball.end(), s.node) == ball.end());
    }
}

TEST_CASE("reidemeister sites") {
    // N([0,2]) is a two crossing unknot whose crossings are both curls
    const Diagram n = test::numerator({0, 2});
    CHECK(r2_sites(n).empty());
    const auto k = kink_sites(n);
    REQUIRE_FALSE(k.empty());
    CHECK(apply_r1(n, k[0]).crossing_count() == 1);

    // a +1 twist next to a -1 twist cancels by R2
    const Diagram c = numerator_closure(
        compose_sum(build_tangle_diagram(BoxVector({1})), build_tangle_diagram(BoxVector({-1}))));
    const auto r2 = r2_sites(c);
    REQUIRE_FALSE(r2.empty());
    CHECK(apply_r2(c, r2[0]).crossing_count() == 0);
}
