#include "ravel/moves.hpp"

#include <stdexcept>

namespace ravel {

namespace {

int md(int s) { return ((s % 4) + 4) % 4; }

}  // namespace

std::vector<Port> face_of(const Diagram& d, Port dart) {
    std::vector<Port> f;
    Port p = dart;
    do {
        f.push_back(p);
        Port q = d.mate(p);
        p = {q.node, md(q.slot + 1)};
    } while (!(p == dart) && f.size() <= static_cast<std::size_t>(4 * d.node_count()));
    return f;
}

bool is_kink(const Diagram& d, int node) {
    const Node& n = d.node(node);
    if (!n.is_crossing()) return false;
    for (int s = 0; s < 4; ++s) {
        Port m = n.mate[s];
        if (m.node == node && (m.slot == md(s + 1) || m.slot == md(s - 1))) return true;
    }
    return false;
}

bool is_r2_bigon(const Diagram& d, Port dart) {
    auto f = face_of(d, dart);
    if (f.size() != 2) return false;
    const Port a = f[0], b = f[1];
    if (a.node == b.node) return false;
    const Node& x = d.node(a.node);
    const Node& y = d.node(b.node);
    if (!x.is_crossing() || !y.is_crossing()) return false;
    // arc a.slot -- b.slot-1 carries one strand; it must be over (or under) at both ends
    return x.over(a.slot) == y.over(md(b.slot - 1));
}

bool is_r3_triangle(const Diagram& d, Port dart) {
    auto f = face_of(d, dart);
    if (f.size() != 3) return false;
    const int x = f[0].node, y = f[1].node, z = f[2].node;
    if (x == y || y == z || x == z) return false;
    if (!d.node(x).is_crossing() || !d.node(y).is_crossing() || !d.node(z).is_crossing()) return false;
    // strands: P on edge xy, Q on edge yz, R on edge zx
    const bool a = d.node(x).over(f[0].slot);           // P over R
    const bool b = d.node(y).over(md(f[1].slot - 1));   // P over Q
    const bool c = d.node(z).over(md(f[2].slot - 1));   // Q over R
    return !(a && !b && !c) && !(!a && b && c);
}

std::vector<int> kink_sites(const Diagram& d) {
    std::vector<int> out;
    for (int i = 0; i < d.node_count(); ++i)
        if (is_kink(d, i)) out.push_back(i);
    return out;
}

std::vector<Port> r2_sites(const Diagram& d) {
    std::vector<Port> out;
    for (const auto& f : faces(d))
        if (f.size() == 2 && f[0].node < f[1].node && is_r2_bigon(d, f[0])) out.push_back(f[0]);
    return out;
}

std::vector<Port> r3_sites(const Diagram& d) {
    std::vector<Port> out;
    for (const auto& f : faces(d))
        if (f.size() == 3 && is_r3_triangle(d, f[0])) out.push_back(f[0]);
    return out;
}

Diagram apply_r1(const Diagram& d, int node) {
    if (!is_kink(d, node)) throw std::invalid_argument("no kink at node " + std::to_string(node));
    return remove_nodes(d, {{node, kStraight}});
}

Diagram apply_r2(const Diagram& d, Port dart) {
    if (!is_r2_bigon(d, dart)) throw std::invalid_argument("no Reidemeister II bigon at site");
    auto f = face_of(d, dart);
    return remove_nodes(d, {{f[0].node, kStraight}, {f[1].node, kStraight}});
}

Diagram apply_r3(const Diagram& d, Port dart) {
    if (!is_r3_triangle(d, dart)) throw std::invalid_argument("no Reidemeister III triangle at site");
    auto f = face_of(d, dart);
    const int x = f[0].node, y = f[1].node, z = f[2].node;
    const int sx = f[0].slot, sy = f[1].slot, sz = f[2].slot;
    const bool a = d.node(x).over(sx);
    const bool b = d.node(y).over(md(sy - 1));
    const bool c = d.node(z).over(md(sz - 1));

    // Externals in counterclockwise order around the triangle: R P | Q R | P Q
    const std::array<Port, 6> ext{Port{x, md(sx + 1)}, Port{x, md(sx + 2)}, Port{z, md(sz + 1)},
                                  Port{z, md(sz + 2)}, Port{y, md(sy + 1)}, Port{y, md(sy + 2)}};
    // New crossings: A = P∩Q on (E1, E2) at x, B = R∩P on (E3, E4) at y, C = Q∩R on (E5, E0) at z.
    const std::array<Port, 6> repl{Port{z, 1}, Port{x, 0}, Port{x, 1}, Port{y, 0}, Port{y, 1}, Port{z, 0}};

    std::vector<Node> nodes = d.nodes();
    std::array<Port, 6> outside{};
    for (int i = 0; i < 6; ++i) {
        Port m = d.mate(ext[i]);
        int j = -1;
        for (int k = 0; k < 6; ++k)
            if (ext[k] == m) j = k;
        outside[i] = j >= 0 ? repl[j] : m;
    }
    auto reset = [&](int id, bool over02, const NodeTag& tag) {
        nodes[id].kind = NodeKind::Crossing;
        nodes[id].over02 = over02;
        nodes[id].tag = tag;
    };
    const NodeTag tx = d.node(x).tag, ty = d.node(y).tag, tz = d.node(z).tag;
    reset(x, b, tx);
    reset(y, !a, ty);
    reset(z, c, tz);
    auto boundary = d.boundary();
    auto link = [&](Port p, Port q) {
        nodes[p.node].mate[p.slot] = q;
        if (q.on_boundary())
            boundary[q.slot] = p;
        else
            nodes[q.node].mate[q.slot] = p;
    };
    for (int i = 0; i < 6; ++i) link(repl[i], outside[i]);
    link({x, 2}, {y, 3});  // P
    link({x, 3}, {z, 2});  // Q
    link({y, 2}, {z, 3});  // R
    return Diagram::from_parts(std::move(nodes), boundary, d.is_open(), d.free_circles());
}

}  // namespace ravel
