#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "ravel/insertion.hpp"

using namespace ravel;

namespace {
DecoratedPresentation D(const char* text) {
    const auto in = parse_input(text);
    return normalize(apply_insertion(in.presentation, in.insertion));
}
}  // namespace

TEST_CASE("addresses") {
    CHECK(CrossingAddress{2, 3, 1}.str() == "v(2,3,1)");
    const auto m = test::M("M[[2,3],[2,3]]");
    CHECK_THROWS_AS(apply_insertion(m, {}), std::invalid_argument);
    CHECK_THROWS_AS(apply_insertion(m, {{{1, 1, 1}, {1, 1, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(apply_insertion(m, {{{3, 1, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(apply_insertion(m, {{{1, 3, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(apply_insertion(m, {{{1, 1, 3}}}), std::invalid_argument);
    CHECK_THROWS_AS(apply_insertion(test::M("M[inf,[2,3]]"), {{{1, 1, 1}}}), std::invalid_argument);
    const auto d = apply_insertion(m, {{{1, 2, 2}}});
    CHECK(d.vertex_count() == 1);
    CHECK(d.summand(1).crossing_count() == 4);
    CHECK(d.rightmost_vertex(1) == CrossingAddress{1, 2, 2});
    CHECK_FALSE(d.rightmost_vertex(2).has_value());
}

TEST_CASE("SA1 drops crossings sharing a box with a vertex") {
    const auto in = parse_input("M[[2,3],[2,3]] v(1,2,1)");
    const auto raw = apply_insertion(in.presentation, in.insertion);
    const auto a = normalize_sa1(raw);
    CHECK(a.summand(1).crossing_count() == 2);
    CHECK(a.summand(1).vertex_count() == 1);
    CHECK(a.summand(2).crossing_count() == 5);
    // the vertex keeps its address
    CHECK(a.rightmost_vertex(1) == CrossingAddress{1, 2, 1});
}

TEST_CASE("SA2 drops a lone crossing right of the last vertex") {
    const auto in = parse_input("M[[2,2],[0,2,1]] v(2,2,1)");
    const auto raw = apply_insertion(in.presentation, in.insertion);
    CHECK_FALSE(is_normalized(raw));
    const auto n = normalize(raw);
    CHECK(is_normalized(n));
    CHECK(n.summand(2).crossings_right_of_rightmost_vertex() == 0);
    CHECK(n.summand(2).crossing_count() == 0);
}

TEST_CASE("normalization is idempotent") {
    for (const char* s : {"M[[2,2],[0,2,1]] v(2,2,1)", "M[[2,3],[2,3]] v(1,2,1) v(2,1,2)", "M[[1,1,1],[3,2]] v(1,2,1)"}) {
        const auto n = D(s);
        const auto nn = normalize(n);
        CHECK(nn.summands.size() == n.summands.size());
        for (int i = 1; i <= n.size(); ++i) {
            CHECK(nn.summand(i).crossing_count() == n.summand(i).crossing_count());
            CHECK(nn.summand(i).vertices(i) == n.summand(i).vertices(i));
        }
    }
}

TEST_CASE("right subtangle and loop") {
    const auto d = D("M[[2,2],[0,1,2]] v(2,2,1)");
    CHECK(subtangle_right(d, 2) == BoxVector({2}));
    CHECK(has_loop_at(d, 2));
    const auto e = D("M[[2,2],[0,1,3]] v(2,2,1)");
    CHECK(subtangle_right(e, 2) == BoxVector({3}));
    CHECK_FALSE(has_loop_at(e, 2));
    CHECK_THROWS_AS(subtangle_right(d, 1), std::invalid_argument);
    CHECK_THROWS_AS(has_loop_at(d, 1), std::invalid_argument);
}

TEST_CASE("exceptional insertions") {
    const auto r = is_exceptional(D("M[[2,2],[0,1,2]] v(2,2,1)"));
    CHECK(r.exceptional);
    CHECK(r.infinity_summand == 1);
    for (const auto& c : r.conditions) CHECK(c.pass);

    // vertex in box 3 after a single-crossing box 2
    CHECK(is_exceptional(D("M[[2,2],[0,1,1,2]] v(2,3,1)")).exceptional);
}

TEST_CASE("each condition can fail on its own") {
    auto failing = [](const char* s) {
        const auto r = is_exceptional(D(s));
        CHECK_FALSE(r.exceptional);
        std::vector<int> out;
        for (int c = 0; c < 4; ++c)
            if (!r.conditions[c].pass) out.push_back(c + 1);
        return out;
    };
    auto has = [](const std::vector<int>& v, int c) { return std::find(v.begin(), v.end(), c) != v.end(); };
    // [2,3] is 7/3 and [0,1,2] is 2/3: no infinity summand at all
    CHECK(has(failing("M[[2,3],[0,1,2]] v(1,2,1) v(2,2,1)"), 1));
    // [0,3,1,2] is 3/11; box 2 holds three crossings in front of the box 3 vertex
    CHECK(failing("M[[2,2],[0,3,1,2]] v(2,3,1)") == std::vector<int>{2});
    // [1,3] is 4/3; nothing is left right of the vertex
    CHECK(has(failing("M[[2,2],[1,3]] v(2,2,3)"), 3));
    // [0,2,3] is 3/7; the right subtangle [3] has parity one, so no loop
    CHECK(failing("M[[2,2],[0,2,3]] v(2,2,1)") == std::vector<int>{4});
}

TEST_CASE("exceptional check needs normal form") {
    const auto in = parse_input("M[[2,2],[0,2,1]] v(2,2,1)");
    CHECK_THROWS_AS(is_exceptional(apply_insertion(in.presentation, in.insertion)), std::invalid_argument);
    CHECK_THROWS_AS(is_exceptional(D("M[[3],[2,3]] v(2,1,1)")), std::invalid_argument);
}
