#pragma once

#include <string>

#include "ravel/diagram.hpp"

namespace ravel {

struct SvgOptions {
    double size = 480;  // width and height in px
    bool label_nodes = false;
    std::string title;
};

// Coordinates come from a barycentric layout of the rotation system with the
// largest face pinned to a circle. Vertices are dots, crossings get a gap in
// the under strand.
std::string render_svg(const Diagram& d, const SvgOptions& opt = {});

// Throws std::runtime_error if the file cannot be written.
void write_svg(const std::string& path, const Diagram& d, const SvgOptions& opt = {});

}  // namespace ravel
