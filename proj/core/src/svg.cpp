#include "ravel/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ravel {

namespace {

struct Pt {
    double x = 0, y = 0;
};

struct Layout {
    std::vector<Pt> pts;
    int nodes = 0;
    int corners = 0;  // boundary points after the arc points, open diagrams only
    int drawn = 0;    // points past this are layout anchors
    ArcTable arcs;

    int end_point(Port p) const { return p.on_boundary() ? nodes + 2 * arcs.size() + p.slot : p.node; }
    // Subdivision point of the arc leaving p that sits next to p.
    int near(Port p) const {
        const int a = arcs.of(p);
        return nodes + 2 * a + (arcs.ends[a][0] == p ? 0 : 1);
    }
};

// Darts of the face containing (n, s), each a node followed by its arc points.
std::vector<int> face_points(const Diagram& d, const Layout& L, Port start) {
    std::vector<int> out;
    Port p = start;
    do {
        const int a = L.arcs.of(p);
        const bool fwd = L.arcs.ends[a][0] == p;
        out.push_back(p.node);
        out.push_back(L.nodes + 2 * a + (fwd ? 0 : 1));
        out.push_back(L.nodes + 2 * a + (fwd ? 1 : 0));
        const Port q = d.mate(p);
        p = {q.node, (q.slot + 1) % 4};
    } while (!(p == start));
    return out;
}

std::vector<std::vector<int>> faces(const Diagram& d, const Layout& L) {
    std::vector<std::vector<bool>> seen(d.node_count(), std::vector<bool>(4, false));
    std::vector<std::vector<int>> out;
    for (int n = 0; n < d.node_count(); ++n)
        for (int s = 0; s < 4; ++s) {
            if (seen[n][s]) continue;
            Port p{n, s};
            do {
                seen[p.node][p.slot] = true;
                const Port q = d.mate(p);
                p = {q.node, (q.slot + 1) % 4};
            } while (!(p == Port{n, s}));
            out.push_back(face_points(d, L, {n, s}));
        }
    return out;
}

Layout layout(const Diagram& d) {
    Layout L;
    L.nodes = d.node_count();
    L.arcs = d.arcs();
    L.corners = d.is_open() ? 4 : 0;
    int total = L.nodes + 2 * L.arcs.size() + L.corners;
    L.pts.assign(total, {});
    std::vector<std::vector<int>> adj(total);
    for (int a = 0; a < L.arcs.size(); ++a) {
        const int u = L.end_point(L.arcs.ends[a][0]), v = L.end_point(L.arcs.ends[a][1]);
        const int m0 = L.nodes + 2 * a, m1 = m0 + 1;
        adj[u].push_back(m0), adj[m0].push_back(u);
        adj[m0].push_back(m1), adj[m1].push_back(m0);
        adj[m1].push_back(v), adj[v].push_back(m1);
    }
    L.drawn = total;
    std::vector<bool> pinned(total, false);
    if (d.is_open()) {
        // corners clockwise from the top left
        const Pt sq[4] = {{-1, 1}, {1, 1}, {1, -1}, {-1, -1}};
        for (int c = 0; c < 4; ++c) {
            const int i = L.nodes + 2 * L.arcs.size() + c;
            L.pts[i] = sq[c];
            pinned[i] = true;
        }
    } else {
        // Every inner face gets a centre point joined to its whole boundary, so
        // twist bigons cannot collapse. The largest face is pinned to a circle;
        // faces are traced clockwise, so it comes out counterclockwise.
        auto fs = faces(d, L);
        std::size_t outer = 0;
        for (std::size_t f = 1; f < fs.size(); ++f)
            if (fs[f].size() > fs[outer].size()) outer = f;
        for (std::size_t f = 0; f < fs.size(); ++f) {
            if (f == outer) continue;
            const int c = total++;
            L.pts.emplace_back();
            adj.emplace_back();
            pinned.push_back(false);
            for (int i : fs[f]) adj[c].push_back(i), adj[i].push_back(c);
        }
        std::vector<int> ring;
        for (int i : fs.empty() ? std::vector<int>{} : fs[outer])
            if (std::find(ring.begin(), ring.end(), i) == ring.end()) ring.push_back(i);
        for (std::size_t k = 0; k < ring.size(); ++k) {
            const double t = 2 * std::numbers::pi * k / ring.size();
            L.pts[ring[k]] = {std::cos(t), std::sin(t)};
            pinned[ring[k]] = true;
        }
    }
    for (int it = 0; it < 20000; ++it) {
        double moved = 0;
        for (int i = 0; i < total; ++i) {
            if (pinned[i] || adj[i].empty()) continue;
            Pt c;
            for (int j : adj[i]) c.x += L.pts[j].x, c.y += L.pts[j].y;
            c.x /= adj[i].size(), c.y /= adj[i].size();
            moved = std::max(moved, std::abs(c.x - L.pts[i].x) + std::abs(c.y - L.pts[i].y));
            L.pts[i] = c;
        }
        if (moved < 1e-10) break;
    }
    return L;
}

struct Frame {
    double scale = 1, ox = 0, oy = 0;
    Pt map(Pt p) const { return {ox + scale * p.x, oy - scale * p.y}; }
};

std::string fmt(Pt p) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << p.x << "," << p.y;
    return os.str();
}

Pt lerp(Pt a, Pt b, double t) { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }

Pt toward(Pt from, Pt to, double len) {
    const double dx = to.x - from.x, dy = to.y - from.y, n = std::hypot(dx, dy);
    if (n < 1e-12) return from;
    return {from.x + len * dx / n, from.y + len * dy / n};
}

}  // namespace

std::string render_svg(const Diagram& d, const SvgOptions& opt) {
    const double size = opt.size, margin = 24;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    if (!opt.title.empty()) os << "<title>" << opt.title << "</title>\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    const double stroke = 2.5, gap = 9;
    Layout L = layout(d);
    Frame F;
    if (L.drawn > 0) {
        double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
        for (int i = 0; i < L.drawn; ++i) {
            const Pt& p = L.pts[i];
            x0 = std::min(x0, p.x), x1 = std::max(x1, p.x), y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
        }
        const double span = std::max({x1 - x0, y1 - y0, 1e-9});
        F.scale = (size - 2 * margin - 30) / span;
        F.ox = margin - F.scale * x0;
        F.oy = margin + F.scale * y1;
    }
    auto P = [&](int i) { return F.map(L.pts[i]); };

    os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << stroke << "\" stroke-linecap=\"round\">\n";
    for (int a = 0; a < L.arcs.size(); ++a) {
        const Pt u = P(L.end_point(L.arcs.ends[a][0])), v = P(L.end_point(L.arcs.ends[a][1]));
        const Pt m0 = P(L.nodes + 2 * a), m1 = P(L.nodes + 2 * a + 1);
        os << "<path class=\"arc\" d=\"M" << fmt(u) << " Q" << fmt(m0) << " " << fmt(lerp(m0, m1, 0.5)) << " Q"
           << fmt(m1) << " " << fmt(v) << "\"/>\n";
    }
    os << "</g>\n";

    for (int n = 0; n < d.node_count(); ++n) {
        const Node& node = d.node(n);
        const Pt c = P(n);
        if (node.is_vertex()) {
            os << "<circle class=\"vertex\" cx=\"" << std::lround(c.x) << "\" cy=\"" << std::lround(c.y)
               << "\" r=\"5\" fill=\"black\"/>\n";
            continue;
        }
        const int s = node.over(0) ? 0 : 1;
        const Pt a = toward(c, P(L.near({n, s})), gap), b = toward(c, P(L.near({n, s + 2})), gap);
        os << "<polyline class=\"crossing\" points=\"" << fmt(a) << " " << fmt(c) << " " << fmt(b)
           << "\" fill=\"none\" stroke=\"white\" stroke-width=\"" << 4 * stroke << "\"/>\n";
        os << "<polyline points=\"" << fmt(a) << " " << fmt(c) << " " << fmt(b)
           << "\" fill=\"none\" stroke=\"black\" stroke-width=\"" << stroke << "\" stroke-linecap=\"round\"/>\n";
    }
    for (int k = 0; k < d.free_circles(); ++k)
        os << "<circle class=\"free\" cx=\"" << margin + 14 + 30 * k << "\" cy=\"" << size - margin - 6
           << "\" r=\"11\" fill=\"none\" stroke=\"black\" stroke-width=\"" << stroke << "\"/>\n";
    if (opt.label_nodes)
        for (int n = 0; n < d.node_count(); ++n) {
            const Pt c = P(n);
            os << "<text x=\"" << c.x + 7 << "\" y=\"" << c.y - 7 << "\" font-size=\"10\" fill=\"#a33\">" << n
               << "</text>\n";
        }
    os << "</svg>\n";
    return os.str();
}

void write_svg(const std::string& path, const Diagram& d, const SvgOptions& opt) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << render_svg(d, opt);
    if (!f) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace ravel
