#pragma once

#include "ravel/constituents.hpp"
#include "ravel/diagram.hpp"
#include "ravel/dsl.hpp"
#include "ravel/pd.hpp"

namespace test {

// PD code of every cycle at once; only meaningful for vertex-free diagrams.
inline ravel::PDCode full_pd(const ravel::Diagram& d) {
    const auto set = ravel::constituent_links(d);
    const ravel::ConstituentLink* best = &set.links.at(0);
    for (const auto& l : set.links)
        if (l.cycles.size() > best->cycles.size()) best = &l;
    return ravel::extract_pd(d, set, *best);
}

inline ravel::Diagram numerator(std::vector<int> boxes) {
    return ravel::numerator_closure(ravel::build_tangle_diagram(ravel::BoxVector(std::move(boxes))));
}

inline ravel::MontesinosPresentation M(const char* text) { return ravel::parse_input(text).presentation; }

}  // namespace test
