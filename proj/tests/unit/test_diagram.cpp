#include "doctest.h"
#include "helpers.hpp"
#include "ravel/invariants.hpp"

using namespace ravel;

TEST_CASE("tangle diagrams") {
    const Diagram t = build_tangle_diagram(BoxVector({2, 3}));
    CHECK(t.is_open());
    CHECK(t.crossing_count() == 5);
    CHECK(t.vertex_count() == 0);
    CHECK(build_tangle_diagram(BoxVector::infinity()).crossing_count() == 0);
    CHECK(build_tangle_diagram(BoxVector({0})).crossing_count() == 0);
}

TEST_CASE("closures") {
    const Diagram t = build_tangle_diagram(BoxVector({2, 3}));
    const Diagram v = vertex_closure(t);
    CHECK_FALSE(v.is_open());
    CHECK(v.crossing_count() == 5);
    CHECK(v.vertex_count() == 1);
    CHECK(euler_check(v));
    CHECK(euler_check(numerator_closure(t)));
    CHECK(euler_check(denominator_closure(t)));
    CHECK(connected_components(numerator_closure(t)) == 1);
}

TEST_CASE("sums and products") {
    const Diagram a = build_tangle_diagram(BoxVector({2, 3}));
    const Diagram b = build_tangle_diagram(BoxVector({3, 2}));
    CHECK(compose_sum(a, b).crossing_count() == 10);
    CHECK(compose_product(a, b).crossing_count() == 10);
    CHECK(euler_check(vertex_closure(compose_sum(a, b))));
    CHECK(euler_check(vertex_closure(compose_product(a, b))));
    // inf + inf closes up with a free circle
    const Diagram ii = vertex_closure(compose_sum(build_tangle_diagram(BoxVector::infinity()),
                                                  build_tangle_diagram(BoxVector::infinity())));
    CHECK(ii.crossing_count() == 0);
    CHECK(ii.free_circles() == 1);
}

TEST_CASE("montesinos diagram tags summands") {
    const Diagram d = build_montesinos_diagram(test::M("M[[2,3],[3,2]]"));
    int first = 0, second = 0;
    for (const auto& n : d.nodes()) (n.tag.summand == 1 ? first : second) += n.is_crossing();
    CHECK(first == 5);
    CHECK(second == 5);
}

TEST_CASE("strand tracing") {
    const auto s = trace_strands(build_tangle_diagram(BoxVector({2, 3})));
    CHECK(s.parity() == Parity::One);
    CHECK(s.strands.size() == 2);
    CHECK(s.closed_components.empty());
    CHECK(trace_strands(build_tangle_diagram(BoxVector({2}))).parity() == Parity::Zero);
}

TEST_CASE("chirality: positive boxes are right handed") {
    CHECK(writhe(test::full_pd(test::numerator({3}))) == 3);
    CHECK(writhe(test::full_pd(test::numerator({-3}))) == -3);
    CHECK(writhe(test::full_pd(test::numerator({3}).mirrored())) == -3);
}

TEST_CASE("vertex replacement") {
    const Diagram n = test::numerator({2, 3});
    const Diagram w = n.with_vertex_at(0);
    CHECK(w.vertex_count() == 1);
    CHECK(w.crossing_count() == 4);
    CHECK(euler_check(w));
}
