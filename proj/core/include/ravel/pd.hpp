#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ravel/diagram.hpp"

namespace ravel {

// Planar diagram code. Each crossing lists its four segment labels
// counterclockwise starting at the incoming under-strand. Labels run 1..2n and
// increase along the orientation of each component.
struct PDCode {
    std::vector<std::array<int, 4>> crossings;
    std::vector<int> signs;  // +1 when the over-strand runs from slot 3 to slot 1
    int components = 0;      // including crossing-free ones
    int crossingless = 0;

    int size() const { return static_cast<int>(crossings.size()); }
};

// Text form: one "X a b c d" line per crossing, one "O" line per crossing-free
// component, '#' comments. Signs are recovered from the label order.
std::string to_text(const PDCode& pd);
PDCode parse_pd(std::string_view text);

// Recomputes signs and component count from the labels; throws on malformed codes.
PDCode normalize_pd(std::vector<std::array<int, 4>> crossings, int crossingless);

PDCode mirror(const PDCode& pd);
Diagram pd_to_diagram(const PDCode& pd);

// Every segment runs from an under-crossing to an over-crossing.
bool is_alternating(const PDCode& pd);
// No crossing has the same region at two of its corners.
bool is_reduced(const PDCode& pd);
// The projection is one connected piece (no crossing-free components either).
bool is_connected_diagram(const PDCode& pd);

}  // namespace ravel
