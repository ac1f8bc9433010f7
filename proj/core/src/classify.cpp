#include "ravel/classify.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "ravel/constituents.hpp"
#include "ravel/invariants.hpp"

namespace ravel {

const char* to_string(VerdictKind k) {
    switch (k) {
    case VerdictKind::Planar: return "Planar";
    case VerdictKind::Ravel: return "Ravel";
    case VerdictKind::ContainsNontrivialKnotOrLink: return "ContainsNontrivialKnotOrLink";
    case VerdictKind::NotRavel: return "NotRavel";
    case VerdictKind::HypothesisViolation: return "HypothesisViolation";
    }
    return "?";
}

namespace {

// closing vertex slots, counterclockwise: SW, NW, NE, SE
constexpr int kWestTop = 1;
constexpr int kEastTop = 2;

struct CycleView {
    ConstituentSet set;  // links left empty

    explicit CycleView(const Diagram& closure) {
        set.graph = vertex_graph(closure);
        set.cycles = enumerate_cycles(set.graph);
    }

    int loop_through(Port p) const {
        for (int c = 0; c < static_cast<int>(set.cycles.size()); ++c) {
            const Cycle& cy = set.cycles[c];
            if (cy.kind != Cycle::Kind::Graph || cy.edges.size() != 1) continue;
            const GraphEdge& e = set.graph.edges[cy.edges[0]];
            if (e.a == p || e.b == p) return c;
        }
        return -1;
    }

    int loop_at(int vertex) const {
        for (int c = 0; c < static_cast<int>(set.cycles.size()); ++c) {
            const Cycle& cy = set.cycles[c];
            if (cy.kind != Cycle::Kind::Graph || cy.edges.size() != 1) continue;
            const GraphEdge& e = set.graph.edges[cy.edges[0]];
            if (e.a.node == vertex && e.b.node == vertex) return c;
        }
        return -1;
    }

    WitnessLoop loop(std::string name, int cycle) const { return {std::move(name), cycle_arcs(set, cycle)}; }
};

int closing_vertex_of(const Diagram& d) {
    for (int i = 0; i < d.node_count(); ++i)
        if (d.node(i).tag.closing) return i;
    throw std::logic_error("closure has no closing vertex");
}

// the two circles of a wedge at w
void add_wedge_loops(Classification& c, const CycleView& view, int w) {
    std::vector<int> seen;
    for (int s = 0; s < 4; ++s) {
        const int l = view.loop_through({w, s});
        if (l < 0 || std::find(seen.begin(), seen.end(), l) != seen.end()) continue;
        seen.push_back(l);
        c.witness.loops.push_back(view.loop(seen.size() == 1 ? "L" : "L'", l));
    }
}

bool infinity_parity(const BoxVector& t) { return t.is_infinity() || parity(t) == Parity::Infinity; }

void attach_planarity(Classification& c, int budget) {
    auto r = planarity_search(c.closure, budget);
    c.witness.planarity = r.trace;
    if (!r.certified)
        c.witness.notes.push_back("planarity search stopped at " + std::to_string(r.trace.final_crossings) +
                                  " crossings after " + std::to_string(r.steps_used) + " steps");
}

// First constituent the oracle calls non-trivial, if any.
bool find_nontrivial(Classification& c) {
    ConstituentSet set;
    try {
        set = constituent_links(c.closure);
    } catch (const std::length_error& e) {
        c.witness.notes.push_back(e.what());
        return false;
    }
    for (const auto& link : set.links) {
        PDCode pd = extract_pd(c.closure, set, link);
        TrivialityReport t;
        try {
            t = triviality(pd, pd.components);
        } catch (const std::length_error& e) {
            c.witness.notes.push_back(e.what());
            continue;
        }
        if (t.status == Triviality::Nontrivial) {
            c.witness.nontrivial_jones = t.jones.str();
            c.witness.nontrivial = std::move(pd);
            return true;
        }
    }
    return false;
}

}  // namespace

Classification classify_closure(const MontesinosPresentation& m, const ClassifyOptions& opt) {
    Classification c;
    const int n = m.size();
    if (n == 0) {
        c.verdict = {VerdictKind::HypothesisViolation, "empty presentation"};
        return c;
    }
    c.closure = vertex_closure(build_montesinos_diagram(m));

    if (m.summands.front().is_infinity() && m.summands.back().is_infinity()) {
        c.verdict = {VerdictKind::HypothesisViolation, "T_1 and T_n are both trivial vertical tangles"};
        if (n == 2) c.witness.notes.push_back("V(inf + inf) is planar although the sum is not rational");
        attach_planarity(c, opt.budget);
        return c;
    }
    // infinity summands are fine here; everything else must be in standard form
    for (const auto& v : validate_standard_form(m).violations) {
        if (v.kind == ViolationKind::TrivialSummand && v.summand > 0 && m.summands[v.summand - 1].is_infinity())
            continue;
        c.verdict = {VerdictKind::HypothesisViolation, "n is not minimal or a summand is malformed: " + v.message};
        return c;
    }

    if (n == 1) {
        c.verdict = {VerdictKind::Planar, "a single rational tangle"};
        if (opt.certify_planar) attach_planarity(c, opt.budget);
        return c;
    }

    const int w = closing_vertex_of(c.closure);
    const CycleView view(c.closure);
    // Work as if T_n is not a trivial vertical tangle; otherwise read the sum from the right.
    const bool flipped = m.summands.back().is_infinity();
    auto real = [&](int k) { return flipped ? n + 1 - k : k; };
    const int east = flipped ? kWestTop : kEastTop;
    const int west = flipped ? kEastTop : kWestTop;

    std::vector<int> inf;  // analysis order
    for (int k = 1; k <= n; ++k)
        if (infinity_parity(m.summands[real(k) - 1])) inf.push_back(k);

    if (inf.empty()) {
        c.verdict = {VerdictKind::Ravel, "no summand has infinity parity"};
        add_wedge_loops(c, view, w);
        c.witness.notes.push_back("V(T) is a wedge of two circles; each loop passes once through every summand");
        return c;
    }

    c.verdict.kind = VerdictKind::ContainsNontrivialKnotOrLink;
    const int i = inf.back();
    if (i < n) {
        c.verdict.reason = "T_" + std::to_string(real(i)) + " has infinity parity";
        const int l1 = view.loop_through({w, east});
        if (l1 >= 0) c.witness.loops.push_back(view.loop("L1", l1));
        c.witness.summand = real(n);
        c.witness.notes.push_back("L1 is a connected sum containing D(T_" + std::to_string(real(n)) + ")");
    } else if (inf.size() == 1) {
        c.verdict.reason = "T_" + std::to_string(real(n)) + " has infinity parity";
        const int l2 = view.loop_through({w, west});
        if (l2 >= 0) c.witness.loops.push_back(view.loop("L2", l2));
        c.witness.summand = real(1);
        c.witness.notes.push_back("L2 is a connected sum containing D(T_" + std::to_string(real(1)) + ")");
    } else {
        const int i2 = inf[inf.size() - 2];
        c.verdict.reason = "T_" + std::to_string(real(i2)) + " and T_" + std::to_string(real(n)) +
                           " have infinity parity";
        const int l1 = view.loop_through({w, east});
        if (l1 >= 0) c.witness.loops.push_back(view.loop("L1", l1));
        // L2 closes up between T_i2 and T_n without meeting w
        const int lo = std::min(real(i2), real(n)), hi = std::max(real(i2), real(n));
        for (int k = 0; k < static_cast<int>(view.set.cycles.size()); ++k) {
            const Cycle& cy = view.set.cycles[k];
            if (cy.kind != Cycle::Kind::Strand) continue;
            bool inside = true;
            for (const auto& p : view.set.graph.strands[cy.strand].passages) {
                const int s = c.closure.node(p.node).tag.summand;
                inside &= s >= lo && s <= hi;
            }
            if (inside) {
                c.witness.loops.push_back(view.loop("L2", k));
                break;
            }
        }
        c.witness.summand = real(n);
        c.witness.notes.push_back("L1 u L2 is a connected sum containing D(T_" + std::to_string(real(n)) + ")");
    }
    return c;
}

Classification classify_insertion_closure(const MontesinosPresentation& m, const VertexInsertion& v,
                                          const ClassifyOptions& opt) {
    if (auto r = validate_standard_form(m); !r.valid())
        throw std::invalid_argument("presentation is not in standard form: " + r.summary());
    const DecoratedPresentation d = normalize(apply_insertion(m, v));
    Classification c;
    c.closure = d.closure();
    const ExceptionalReport rep = is_exceptional(d);
    c.witness.exceptional = rep;

    if (rep.exceptional) {
        c.verdict = {VerdictKind::Ravel, "exceptional vertex insertion"};
        const CycleView view(c.closure);
        for (int k = 1; k <= d.size(); ++k) {
            if (k == rep.infinity_summand) continue;
            for (int x = 0; x < c.closure.node_count(); ++x) {
                const Node& nd = c.closure.node(x);
                if (!nd.is_vertex() || nd.tag.closing || nd.tag.summand != k) continue;
                if (int l = view.loop_at(x); l >= 0) c.witness.loops.push_back(view.loop("c_" + std::to_string(k), l));
            }
        }
        c.witness.summand = rep.infinity_summand;
        return c;
    }

    c.verdict = {VerdictKind::NotRavel, rep.summary()};
    bool planar_expected = true;
    for (const auto& s : d.summands)
        if (s.vertex_count() > 0 && s.crossings_right_of_rightmost_vertex() > 1) planar_expected = false;
    c.witness.planarity_requested = planar_expected;
    if (planar_expected)
        c.witness.notes.push_back("at most one crossing right of each rightmost vertex: expect a planar embedding");

    if (!opt.refine) return c;
    if (find_nontrivial(c)) {
        c.verdict = {VerdictKind::ContainsNontrivialKnotOrLink, "oracle: a constituent link is non-trivial"};
        return c;
    }
    auto r = planarity_search(c.closure, opt.budget);
    c.witness.planarity = r.trace;
    if (r.certified) {
        c.verdict = {VerdictKind::Planar, "rewrite search reached a crossing-free diagram"};
    } else {
        c.witness.notes.push_back("refinement inconclusive within budget");
    }
    return c;
}

Diagram build_algebraic_diagram(const AlgebraicExpr& e) {
    int next_leaf = 0;
    std::function<Diagram(const AlgebraicExpr&)> rec = [&](const AlgebraicExpr& x) -> Diagram {
        switch (x.kind()) {
        case AlgebraicExpr::Kind::Leaf: {
            const Diagram d = build_tangle_diagram(x.tangle());
            std::vector<Node> nodes = d.nodes();
            for (auto& n : nodes) n.tag.leaf = next_leaf;
            ++next_leaf;
            return Diagram::from_parts(std::move(nodes), d.boundary(), true, d.free_circles());
        }
        case AlgebraicExpr::Kind::Sum: {
            Diagram a = rec(x.left());
            return compose_sum(a, rec(x.right()));
        }
        case AlgebraicExpr::Kind::Product: {
            Diagram a = rec(x.left());
            return compose_product(a, rec(x.right()));
        }
        }
        throw std::logic_error("bad expression");
    };
    return rec(e);
}

LeafPassage trace_leaf_passages(const AlgebraicExpr& e) {
    // Endpoint 4 * leaf + corner. Each endpoint has an inner partner (its leaf
    // strand) and at most one outer partner (a gluing arc).
    std::vector<int> inner, outer;
    std::function<std::array<int, 4>(const AlgebraicExpr&)> rec = [&](const AlgebraicExpr& x) -> std::array<int, 4> {
        if (x.kind() == AlgebraicExpr::Kind::Leaf) {
            const int leaf = static_cast<int>(inner.size()) / 4;
            const int b = 4 * leaf;
            inner.resize(b + 4);
            outer.resize(b + 4, -1);
            const StrandPartition sp = trace_strands(build_tangle_diagram(x.tangle()));
            for (int c = 0; c < 4; ++c) inner[b + c] = b + sp.partner[c];
            return {b + NW, b + NE, b + SE, b + SW};
        }
        const auto a = rec(x.left());
        const auto b = rec(x.right());
        auto glue = [&](int p, int q) {
            outer[p] = q;
            outer[q] = p;
        };
        if (x.kind() == AlgebraicExpr::Kind::Sum) {
            glue(a[NE], b[NW]);
            glue(a[SE], b[SW]);
            return {a[NW], b[NE], b[SE], a[SW]};
        }
        glue(a[SW], b[NW]);
        glue(a[SE], b[NE]);
        return {a[NW], a[NE], b[SE], b[SW]};
    };
    const auto corners = rec(e);
    LeafPassage lp;
    std::vector<char> seen(inner.size(), 0);
    for (int c : {corners[NW], corners[NE], corners[SE], corners[SW]}) {
        if (seen[c]) continue;
        std::vector<int> leaves;
        int p = c;
        for (;;) {
            seen[p] = 1;
            const int q = inner[p];
            seen[q] = 1;
            leaves.push_back(p / 4);
            if (outer[q] < 0) break;  // reached a corner of the whole expression
            p = outer[q];
        }
        lp.strands.push_back(std::move(leaves));
    }
    for (int p = 0; p < static_cast<int>(inner.size()); ++p) {
        if (seen[p]) continue;
        int x = p;
        do {
            seen[x] = 1;
            seen[inner[x]] = 1;
            x = outer[inner[x]];
        } while (x != p);
        ++lp.closed_components;
    }
    return lp;
}

Classification classify_algebraic_closure(const AlgebraicExpr& e, const ClassifyOptions& opt) {
    (void)opt;
    Classification c;
    c.closure = vertex_closure(build_algebraic_diagram(e));
    const auto leaves = e.leaves();
    const int n = static_cast<int>(leaves.size());
    if (n < 2) {
        c.verdict = {VerdictKind::HypothesisViolation, "a single rational leaf is rational; its closure is planar"};
        return c;
    }
    if (n == 2 && leaves[0].is_infinity() && leaves[1].is_infinity()) {
        c.verdict = {VerdictKind::HypothesisViolation, "T_1 and T_2 are both trivial vertical tangles"};
        return c;
    }
    const LeafPassage lp = trace_leaf_passages(e);
    bool once = lp.closed_components == 0 && lp.strands.size() == 2;
    for (const auto& s : lp.strands) {
        std::vector<int> count(n, 0);
        for (int leaf : s) ++count[leaf];
        once &= std::all_of(count.begin(), count.end(), [](int k) { return k == 1; });
    }
    if (!once) {
        c.verdict = {VerdictKind::HypothesisViolation, "sufficient condition not met: a strand misses a leaf or meets one twice"};
        return c;
    }
    c.verdict = {VerdictKind::Ravel, "each strand passes through each leaf exactly once"};
    const int w = closing_vertex_of(c.closure);
    const CycleView view(c.closure);
    add_wedge_loops(c, view, w);
    return c;
}

}  // namespace ravel
