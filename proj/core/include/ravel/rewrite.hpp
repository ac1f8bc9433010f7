#pragma once

#include <string>
#include <vector>

#include "ravel/diagram.hpp"

namespace ravel {

enum class RewriteMove {
    UntwistAtClosingVertex,
    UntwistAtVertex,
    FlipSubtangle,
    ReidemeisterI,
    ReidemeisterII,
    RelocateVertexBox3to2,
    ShiftFirstBoxCrossingsLeft,
};

const char* to_string(RewriteMove m);

// Where a move applies.
//  untwist: crossing `node` shares the bigon at its corner `slot` with a vertex
//  R1: kinked crossing `node`;  R2: bigon dart (node, slot)
//  flip: crossing `node`, corner `slot` faces the flipped ball, whose NE and SE
//        arcs leave along `top` and `bottom`
//  relocate / shift: `summand` (1-based), resolved against node tags
struct RewriteStep {
    RewriteMove move = RewriteMove::ReidemeisterI;
    int node = -1;
    int slot = -1;
    Port top{}, bottom{};
    int summand = 0;
    std::string str() const;
};

struct RewriteTrace {
    int initial_crossings = 0;
    int final_crossings = 0;
    std::vector<RewriteStep> steps;
    std::string str() const;  // one move per line
};

// Throws std::invalid_argument when the move does not apply at the site.
Diagram apply_move(const Diagram& d, const RewriteStep& step);
Diagram replay(const Diagram& d, const RewriteTrace& trace);

std::vector<RewriteStep> untwist_sites(const Diagram& d);
std::vector<RewriteStep> flip_sites(const Diagram& d);
// Nodes of the ball a flip turns over.
std::vector<int> flip_ball(const Diagram& d, const RewriteStep& flip);

inline constexpr int kDefaultSearchBudget = 10000;

struct PlanarityResult {
    bool certified = false;
    RewriteTrace trace;
    int steps_used = 0;
    Diagram final;
};

// Greedy descent by untwists and R1/R2, with iterative deepening over flips
// when stuck. `certified` means a crossing-free diagram was reached; failure
// says nothing about planarity.
PlanarityResult planarity_search(const Diagram& d, int budget = kDefaultSearchBudget);

}  // namespace ravel
