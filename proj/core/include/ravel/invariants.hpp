#pragma once

#include <cstdint>

#include "ravel/laurent.hpp"
#include "ravel/pd.hpp"

namespace ravel {

inline constexpr int kDefaultBracketCap = 24;

// Memoized skein recursion that strips kinks and Reidemeister II bigons before branching.
LaurentPoly kauffman_bracket(const PDCode& pd, int max_crossings = kDefaultBracketCap);
// Plain sum over all 2^n states; the cross-check for the recursion.
LaurentPoly kauffman_bracket_state_sum(const PDCode& pd, int max_crossings = kDefaultBracketCap);

int writhe(const PDCode& pd);
LaurentPoly jones(const PDCode& pd, int max_crossings = kDefaultBracketCap);  // in A, t = A^-4
LaurentPoly unlink_jones(int components);
std::int64_t determinant(const PDCode& pd);

enum class Triviality { Trivial, Nontrivial, Inconclusive };
const char* to_string(Triviality t);

struct TrivialityReport {
    Triviality status = Triviality::Inconclusive;
    LaurentPoly jones;
    int reidemeister_steps = 0;
};

inline constexpr int kDefaultReidemeisterBudget = 20000;

TrivialityReport triviality(const PDCode& pd, int components, int budget = kDefaultReidemeisterBudget);
Triviality is_trivial(const PDCode& pd, int components);

// Greedy R1/R2 descent with Reidemeister III lookahead. True when the diagram
// reaches zero crossings within the step budget.
bool reidemeister_unknotting(const Diagram& d, int budget, int* steps = nullptr);

}  // namespace ravel
