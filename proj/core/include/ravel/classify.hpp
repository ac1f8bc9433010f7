#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ravel/diagram.hpp"
#include "ravel/insertion.hpp"
#include "ravel/pd.hpp"
#include "ravel/rewrite.hpp"
#include "ravel/tangle.hpp"

namespace ravel {

enum class VerdictKind { Planar, Ravel, ContainsNontrivialKnotOrLink, NotRavel, HypothesisViolation };
const char* to_string(VerdictKind k);

struct Verdict {
    VerdictKind kind = VerdictKind::HypothesisViolation;
    std::string reason;
};

struct WitnessLoop {
    std::string name;       // L, L1, L2, c_k, ...
    std::vector<int> arcs;  // arc ids of the closure diagram
};

struct Witness {
    std::vector<WitnessLoop> loops;
    int summand = 0;  // the summand whose denominator closure sits inside the loops
    std::vector<std::string> notes;
    std::optional<ExceptionalReport> exceptional;
    bool planarity_requested = false;  // every vertex summand ends with its rightmost vertex
    std::optional<RewriteTrace> planarity;
    std::optional<PDCode> nontrivial;  // a constituent the oracle found non-trivial
    std::string nontrivial_jones;
};

struct Classification {
    Verdict verdict;
    Witness witness;
    Diagram closure;  // the diagram the witness refers to
};

struct ClassifyOptions {
    bool refine = false;  // settle NotRavel by search and oracle when possible
    int budget = kDefaultSearchBudget;
    bool certify_planar = true;  // attach a rewrite trace to Planar verdicts
};

Classification classify_closure(const MontesinosPresentation& m, const ClassifyOptions& opt = {});

// Throws std::invalid_argument for non-standard presentations and bad insertions.
Classification classify_insertion_closure(const MontesinosPresentation& m, const VertexInsertion& v,
                                          const ClassifyOptions& opt = {});

// Sufficient condition only: Ravel when each strand runs through every leaf
// exactly once, otherwise HypothesisViolation. The caller vouches that the
// expression is not rational; a single leaf is rejected.
Classification classify_algebraic_closure(const AlgebraicExpr& e, const ClassifyOptions& opt = {});

Diagram build_algebraic_diagram(const AlgebraicExpr& e);  // leaves tagged 0, 1, ... left to right

// Which leaves each of the two strands of the expression runs through, with multiplicity.
struct LeafPassage {
    std::vector<std::vector<int>> strands;  // leaf indices in order of travel
    int closed_components = 0;
};
LeafPassage trace_leaf_passages(const AlgebraicExpr& e);

}  // namespace ravel
