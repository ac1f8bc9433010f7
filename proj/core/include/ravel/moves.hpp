#pragma once

#include <vector>

#include "ravel/diagram.hpp"

// Local Reidemeister moves on closed diagrams. Sites are face darts as
// returned by faces(): the dart (n, s) names the corner of n between s-1 and s.
namespace ravel {

bool is_kink(const Diagram& d, int node);
bool is_r2_bigon(const Diagram& d, Port dart);
bool is_r3_triangle(const Diagram& d, Port dart);

std::vector<int> kink_sites(const Diagram& d);
std::vector<Port> r2_sites(const Diagram& d);
std::vector<Port> r3_sites(const Diagram& d);

// Each throws std::invalid_argument when the move does not apply at the site.
Diagram apply_r1(const Diagram& d, int node);
Diagram apply_r2(const Diagram& d, Port dart);
Diagram apply_r3(const Diagram& d, Port dart);

// The other darts of the face containing `dart`, in face order starting with it.
std::vector<Port> face_of(const Diagram& d, Port dart);

}  // namespace ravel
