#include "doctest.h"
#include "helpers.hpp"
#include "ravel/classify.hpp"
#include "ravel/verify.hpp"

using namespace ravel;

namespace {
Classification C(const char* s, ClassifyOptions o = {}) { return classify_input(parse_input(s), o); }
}  // namespace

TEST_CASE("one summand is planar") {
    const auto c = C("M[[2,3]]");
    CHECK(c.verdict.kind == VerdictKind::Planar);
    REQUIRE(c.witness.planarity.has_value());
    CHECK(c.witness.planarity->final_crossings == 0);
}

TEST_CASE("no infinity summand gives a ravel") {
    const auto c = C("M[[2,3],[2,3]]");
    CHECK(c.verdict.kind == VerdictKind::Ravel);
    CHECK(c.witness.loops.size() == 2);
}

TEST_CASE("infinity summands give knots") {
    const auto c = C("M[[2,2],[2,3]]");
    CHECK(c.verdict.kind == VerdictKind::ContainsNontrivialKnotOrLink);
    REQUIRE_FALSE(c.witness.loops.empty());
    CHECK(c.witness.loops[0].name == "L1");
    CHECK(C("M[[3,2],[3,2]]").verdict.kind == VerdictKind::ContainsNontrivialKnotOrLink);
    CHECK(C("M[[2,3],[3,2],[2,3]]").verdict.kind == VerdictKind::ContainsNontrivialKnotOrLink);
}

TEST_CASE("two trivial vertical tangles") {
    const auto c = C("M[inf,inf]");
    CHECK(c.verdict.kind == VerdictKind::HypothesisViolation);
    REQUIRE(c.witness.planarity.has_value());
    CHECK(c.witness.planarity->final_crossings == 0);
}

TEST_CASE("horizontal summand is outside the hypotheses") {
    CHECK(C("M[[3],[2,3]]").verdict.kind == VerdictKind::HypothesisViolation);
}

TEST_CASE("insertion verdicts") {
    const auto r = C("M[[2,2],[0,1,2]] v(2,2,1)");
    CHECK(r.verdict.kind == VerdictKind::Ravel);
    REQUIRE(r.witness.exceptional.has_value());
    CHECK(r.witness.exceptional->exceptional);
    CHECK(r.closure.vertex_count() == 2);

    const auto n = C("M[[2,3],[0,1,2]] v(2,2,1)");
    CHECK(n.verdict.kind == VerdictKind::NotRavel);
    REQUIRE(n.witness.exceptional.has_value());
    CHECK_FALSE(n.witness.exceptional->conditions[0].pass);
}

TEST_CASE("refine settles a non-exceptional insertion") {
    ClassifyOptions o;
    o.refine = true;
    const auto c = C("M[[2,2],[0,1,3]] v(2,2,1)", o);
    CHECK((c.verdict.kind == VerdictKind::ContainsNontrivialKnotOrLink || c.verdict.kind == VerdictKind::Planar ||
           c.verdict.kind == VerdictKind::NotRavel));
    if (c.verdict.kind == VerdictKind::ContainsNontrivialKnotOrLink) CHECK(c.witness.nontrivial.has_value());
}

TEST_CASE("algebraic closures") {
    CHECK(C("A[[2,3] + [2,3]]").verdict.kind == VerdictKind::Ravel);
    CHECK(C("A[[2,3] * [3,2]]").verdict.kind == VerdictKind::Ravel);
    CHECK(C("A[[2,3]]").verdict.kind == VerdictKind::HypothesisViolation);
    CHECK(C("A[inf + inf]").verdict.kind == VerdictKind::HypothesisViolation);
}

TEST_CASE("leaf passages") {
    const auto e = *parse_input("A[[2,3] + [2,3]]").expr;
    const auto p = trace_leaf_passages(e);
    REQUIRE(p.strands.size() == 2);
    for (const auto& s : p.strands) CHECK(s.size() == 2);
}

TEST_CASE("verification agrees on the basic shapes") {
    for (const char* s : {"M[[2,3]]", "M[[2,3],[2,3]]", "M[[3,2],[3,2]]", "M[[2,2],[0,1,2]] v(2,2,1)"}) {
        const auto v = verify(parse_input(s), {}, {});
        CHECK_MESSAGE(v.agreement == Agreement::Agree, s, ": ", v.detail);
    }
    CHECK(verify(parse_input("M[inf,inf]"), {}, {}).agreement == Agreement::NotApplicable);
}

TEST_CASE("judge") {
    OracleReport o;
    o.trivial = 3;
    CHECK(judge({VerdictKind::Ravel, ""}, o, nullptr) == Agreement::Agree);
    CHECK(judge({VerdictKind::ContainsNontrivialKnotOrLink, ""}, o, nullptr) == Agreement::Disagree);
    CHECK(judge({VerdictKind::NotRavel, ""}, o, nullptr) == Agreement::Inconclusive);
    o.nontrivial = 1;
    CHECK(judge({VerdictKind::Ravel, ""}, o, nullptr) == Agreement::Disagree);
    CHECK(judge({VerdictKind::NotRavel, ""}, o, nullptr) == Agreement::Agree);
    OracleReport u;
    u.inconclusive = 1;
    CHECK(judge({VerdictKind::Ravel, ""}, u, nullptr) == Agreement::Inconclusive);
}
