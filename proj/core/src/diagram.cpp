#include "ravel/diagram.hpp"

#include <numeric>
#include <stdexcept>

namespace ravel {

namespace {

// While gluing, boundary corners of the parts become numbered terminals,
// encoded as ports with node <= -2.
bool is_term(Port p) { return p.node <= -2; }
int term_id(Port p) { return -2 - p.node; }
Port term(int t) { return {-2 - t, 0}; }

struct Assembly {
    std::vector<Node> nodes;
    std::vector<Port> inner;
    std::vector<int> join;
    std::vector<int> corner;
    int free_circles = 0;

    int add(const Diagram& d) {
        if (!d.is_open()) throw std::invalid_argument("gluing needs open diagrams");
        const int off = static_cast<int>(nodes.size());
        const int t0 = static_cast<int>(inner.size());
        auto shift = [&](Port p) { return p.on_boundary() ? term(t0 + p.slot) : Port{p.node + off, p.slot}; };
        for (Node n : d.nodes()) {
            for (auto& m : n.mate) m = shift(m);
            nodes.push_back(n);
        }
        for (int c = 0; c < 4; ++c) {
            inner.push_back(shift(d.boundary()[c]));
            join.push_back(-1);
            corner.push_back(-1);
        }
        free_circles += d.free_circles();
        return t0;
    }

    void connect(int a, int b) {
        join[a] = b;
        join[b] = a;
    }

    Diagram finish() {
        std::vector<char> seen(inner.size(), 0);
        auto follow = [&](int t) {
            for (;;) {
                seen[t] = 1;
                if (corner[t] >= 0) return Port{kBoundary, corner[t]};
                int u = join[t];
                if (u < 0) throw std::logic_error("dangling terminal while gluing");
                seen[u] = 1;
                Port q = inner[u];
                if (!is_term(q)) return q;
                t = term_id(q);
            }
        };
        for (auto& n : nodes)
            for (auto& m : n.mate)
                if (is_term(m)) m = follow(term_id(m));
        std::array<Port, 4> boundary{};
        bool open = false;
        for (int t = 0; t < static_cast<int>(inner.size()); ++t) {
            if (corner[t] < 0) continue;
            open = true;
            seen[t] = 1;
            Port q = inner[t];
            boundary[corner[t]] = is_term(q) ? follow(term_id(q)) : q;
        }
        int circles = free_circles;
        for (int t = 0; t < static_cast<int>(inner.size()); ++t) {
            if (seen[t]) continue;
            int x = t;
            do {
                seen[x] = 1;
                int u = join[x];
                seen[u] = 1;
                x = term_id(inner[u]);
            } while (x != t);
            ++circles;
        }
        return Diagram::from_parts(std::move(nodes), boundary, open, circles);
    }
};

Diagram closing_vertex() {
    Node w;
    w.kind = NodeKind::Vertex;
    w.tag.closing = true;
    // counterclockwise around w: SW, NW, NE, SE
    const std::array<int, 4> corner_at{SW, NW, NE, SE};
    std::array<Port, 4> boundary{};
    for (int s = 0; s < 4; ++s) {
        w.mate[s] = {kBoundary, corner_at[s]};
        boundary[corner_at[s]] = {0, s};
    }
    return Diagram::from_parts({w}, boundary, true, 0);
}

}  // namespace

Diagram Diagram::from_parts(std::vector<Node> nodes, std::array<Port, 4> boundary, bool open, int free_circles) {
    Diagram d;
    d.nodes_ = std::move(nodes);
    d.boundary_ = boundary;
    d.open_ = open;
    d.free_circles_ = free_circles;
    const int n = d.node_count();
    auto valid = [&](Port p) {
        if (p.on_boundary()) return open && p.node == kBoundary && p.slot >= 0 && p.slot < 4;
        return p.node < n && p.slot >= 0 && p.slot < 4;
    };
    auto check = [&](Port p) {
        Port q = d.mate(p);
        if (!valid(q) || q == p || d.mate(q) != p) throw std::logic_error("diagram ports are not paired");
    };
    for (int i = 0; i < n; ++i)
        for (int s = 0; s < 4; ++s) check({i, s});
    if (open)
        for (int c = 0; c < 4; ++c) check({kBoundary, c});
    return d;
}

int Diagram::crossing_count() const {
    int c = 0;
    for (const auto& n : nodes_) c += n.is_crossing();
    return c;
}

int Diagram::vertex_count() const { return node_count() - crossing_count(); }

ArcTable Diagram::arcs() const {
    ArcTable t;
    t.node_count = node_count();
    t.by_key.assign(4 * t.node_count + 4, -1);
    auto visit = [&](Port p) {
        if (t.by_key[t.key(p)] >= 0) return;
        Port q = mate(p);
        int id = t.size();
        t.ends.push_back({p, q});
        t.by_key[t.key(p)] = id;
        t.by_key[t.key(q)] = id;
    };
    for (int i = 0; i < node_count(); ++i)
        for (int s = 0; s < 4; ++s) visit({i, s});
    if (open_)
        for (int c = 0; c < 4; ++c) visit({kBoundary, c});
    return t;
}

Diagram Diagram::mirrored() const {
    Diagram d = *this;
    for (auto& n : d.nodes_)
        if (n.is_crossing()) n.over02 = !n.over02;
    return d;
}

Diagram Diagram::with_vertex_at(int node) const {
    Diagram d = *this;
    d.nodes_.at(node).kind = NodeKind::Vertex;
    return d;
}

Diagram Diagram::with_tags(int summand) const {
    Diagram d = *this;
    for (auto& n : d.nodes_) n.tag.summand = summand;
    return d;
}

Diagram build_braid_diagram(const std::vector<BraidBox>& boxes, int summand) {
    if (boxes.empty()) throw std::invalid_argument("3-braid needs at least one box");
    std::vector<Node> nodes;
    std::array<Port, 4> boundary{};
    auto set = [&](Port a, Port b) {
        if (a.on_boundary())
            boundary[a.slot] = b;
        else
            nodes[a.node].mate[a.slot] = b;
    };
    auto link = [&](Port a, Port b) {
        set(a, b);
        set(b, a);
    };
    std::array<Port, 3> cur{Port{kBoundary, NE}, Port{kBoundary, NW}, Port{kBoundary, SW}};
    int last_row = 1;
    for (std::size_t k = 0; k < boxes.size(); ++k) {
        const int r = (k % 2 == 0) ? 1 : 0;  // box k+1 odd -> lower pair
        last_row = r;
        const BraidBox& box = boxes[k];
        for (const BraidSlot& s : box.slots) {
            Node n;
            n.kind = s.vertex ? NodeKind::Vertex : NodeKind::Crossing;
            n.over02 = (r == 1) != (box.sign > 0);  // positive boxes are right-handed
            n.tag = {summand, box.index ? box.index : static_cast<int>(k) + 1, s.pos, -1, false};
            const int id = static_cast<int>(nodes.size());
            nodes.push_back(n);
            link(cur[r], {id, 1});
            link(cur[r + 1], {id, 2});
            cur[r] = {id, 0};
            cur[r + 1] = {id, 3};
        }
    }
    if (last_row == 1) {
        link(cur[0], cur[1]);
        link(cur[2], {kBoundary, SE});
    } else {
        link(cur[1], cur[2]);
        link(cur[0], {kBoundary, SE});
    }
    return Diagram::from_parts(std::move(nodes), boundary, true, 0);
}

Diagram build_tangle_diagram(const BoxVector& t, int summand) {
    if (t.is_infinity()) {
        std::array<Port, 4> b{};
        b[NW] = {kBoundary, SW};
        b[SW] = {kBoundary, NW};
        b[NE] = {kBoundary, SE};
        b[SE] = {kBoundary, NE};
        return Diagram::from_parts({}, b, true, 0);
    }
    std::vector<BraidBox> boxes;
    for (int k = 0; k < t.box_count(); ++k) {
        int a = t.boxes()[k];
        BraidBox box;
        box.sign = a < 0 ? -1 : 1;
        box.index = k + 1;
        for (int p = 1; p <= (a < 0 ? -a : a); ++p) box.slots.push_back({false, p});
        boxes.push_back(std::move(box));
    }
    return build_braid_diagram(boxes, summand);
}

Diagram compose_sum(const Diagram& a, const Diagram& b) {
    Assembly as;
    int ta = as.add(a), tb = as.add(b);
    as.connect(ta + NE, tb + NW);
    as.connect(ta + SE, tb + SW);
    as.corner[ta + NW] = NW;
    as.corner[ta + SW] = SW;
    as.corner[tb + NE] = NE;
    as.corner[tb + SE] = SE;
    return as.finish();
}

Diagram build_montesinos_diagram(const MontesinosPresentation& m) {
    if (m.summands.empty()) throw std::invalid_argument("presentation has no summands");
    Diagram d = build_tangle_diagram(m.summands[0], 1);
    for (int i = 1; i < m.size(); ++i) d = compose_sum(d, build_tangle_diagram(m.summands[i], i + 1));
    return d;
}

Diagram compose_product(const Diagram& a, const Diagram& b) {
    Assembly as;
    int ta = as.add(a), tb = as.add(b);
    as.connect(ta + SW, tb + NW);
    as.connect(ta + SE, tb + NE);
    as.corner[ta + NW] = NW;
    as.corner[ta + NE] = NE;
    as.corner[tb + SW] = SW;
    as.corner[tb + SE] = SE;
    return as.finish();
}

Diagram vertex_closure(const Diagram& d) {
    if (!d.is_open()) throw std::invalid_argument("vertex closure needs an open diagram with four endpoints");
    Assembly as;
    int t = as.add(d), tw = as.add(closing_vertex());
    for (int c = 0; c < 4; ++c) as.connect(t + c, tw + c);
    return as.finish();
}

Diagram numerator_closure(const Diagram& d) {
    Assembly as;
    int t = as.add(d);
    as.connect(t + NW, t + NE);
    as.connect(t + SW, t + SE);
    return as.finish();
}

Diagram denominator_closure(const Diagram& d) {
    Assembly as;
    int t = as.add(d);
    as.connect(t + NW, t + SW);
    as.connect(t + NE, t + SE);
    return as.finish();
}

Walk walk_from(const Diagram& d, Port leaving) {
    Walk w;
    w.start = leaving;
    w.leaving.push_back(leaving);
    Port q = d.mate(leaving);
    while (!q.on_boundary() && d.node(q.node).is_crossing()) {
        Port out{q.node, (q.slot + 2) % 4};
        w.passages.push_back({q.node, q.slot});
        if (out == leaving) {
            w.closed = true;
            return w;
        }
        w.leaving.push_back(out);
        q = d.mate(out);
    }
    w.end = q;
    return w;
}

Parity StrandPartition::parity() const {
    switch (partner[NW]) {
    case NE: return Parity::Zero;
    case SW: return Parity::Infinity;
    case SE: return Parity::One;
    default: throw std::logic_error("NW strand does not reach the boundary");
    }
}

StrandPartition trace_strands(const Diagram& d) {
    if (!d.is_open()) throw std::invalid_argument("strand tracing needs an open diagram");
    StrandPartition sp;
    sp.free_circles = d.free_circles();
    std::vector<std::array<char, 2>> used(d.node_count(), {0, 0});
    auto mark = [&](const Walk& w) {
        for (const auto& p : w.passages) used[p.node][p.in % 2] = 1;
    };
    std::array<char, 4> done{};
    for (int c = 0; c < 4; ++c) {
        if (done[c]) continue;
        Walk w = walk_from(d, {kBoundary, c});
        done[c] = 1;
        if (w.end.on_boundary()) {
            sp.partner[c] = w.end.slot;
            sp.partner[w.end.slot] = c;
            done[w.end.slot] = 1;
        }
        mark(w);
        sp.strands.push_back(std::move(w));
    }
    for (int i = 0; i < d.node_count(); ++i) {
        if (!d.node(i).is_vertex()) continue;
        for (int s = 0; s < 4; ++s) mark(walk_from(d, {i, s}));
    }
    for (int i = 0; i < d.node_count(); ++i) {
        if (!d.node(i).is_crossing()) continue;
        for (int k = 0; k < 2; ++k) {
            if (used[i][k]) continue;
            Walk w = walk_from(d, {i, k});
            mark(w);
            sp.closed_components.push_back(std::move(w));
        }
    }
    return sp;
}

std::vector<std::vector<Port>> faces(const Diagram& d) {
    if (d.is_open()) throw std::invalid_argument("faces are defined for closed diagrams");
    std::vector<std::array<char, 4>> seen(d.node_count(), {0, 0, 0, 0});
    std::vector<std::vector<Port>> out;
    for (int n = 0; n < d.node_count(); ++n)
        for (int s = 0; s < 4; ++s) {
            if (seen[n][s]) continue;
            std::vector<Port> face;
            Port p{n, s};
            do {
                seen[p.node][p.slot] = 1;
                face.push_back(p);
                Port q = d.mate(p);
                p = {q.node, (q.slot + 1) % 4};
            } while (!(p == Port{n, s}));
            out.push_back(std::move(face));
        }
    return out;
}

int connected_components(const Diagram& d) {
    std::vector<int> parent(d.node_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int n = 0; n < d.node_count(); ++n)
        for (const auto& m : d.node(n).mate)
            if (!m.on_boundary()) parent[find(n)] = find(m.node);
    int c = 0;
    for (int n = 0; n < d.node_count(); ++n) c += find(n) == n;
    return c;
}

bool euler_check(const Diagram& d) {
    if (d.is_open()) return euler_check(vertex_closure(d));
    const int v = d.node_count();
    if (v == 0) return true;
    const int e = 2 * v;
    const int f = static_cast<int>(faces(d).size());
    return v - e + f == 2 * connected_components(d);
}

Diagram remove_nodes(const Diagram& d, const std::vector<Removal>& removals) {
    const int n = d.node_count();
    std::vector<int> removed(n, -1);
    for (std::size_t i = 0; i < removals.size(); ++i) {
        if (removed.at(removals[i].node) >= 0) throw std::invalid_argument("node removed twice");
        removed[removals[i].node] = static_cast<int>(i);
    }
    std::vector<int> index(n, -1);
    int kept = 0;
    for (int i = 0; i < n; ++i)
        if (removed[i] < 0) index[i] = kept++;
    auto mapped = [&](Port p) { return p.on_boundary() ? p : Port{index[p.node], p.slot}; };
    std::vector<std::array<char, 4>> seen(n, {0, 0, 0, 0});
    auto resolve = [&](Port q) {
        for (;;) {
            seen[q.node][q.slot] = 1;
            Port r{q.node, removals[removed[q.node]].pair[q.slot]};
            seen[r.node][r.slot] = 1;
            Port m = d.mate(r);
            if (m.on_boundary() || removed[m.node] < 0) return mapped(m);
            q = m;
        }
    };
    std::vector<Node> nodes;
    nodes.reserve(kept);
    for (int i = 0; i < n; ++i) {
        if (removed[i] >= 0) continue;
        Node nd = d.node(i);
        for (auto& m : nd.mate) m = (m.on_boundary() || removed[m.node] < 0) ? mapped(m) : resolve(m);
        nodes.push_back(nd);
    }
    std::array<Port, 4> boundary{};
    if (d.is_open())
        for (int c = 0; c < 4; ++c) {
            Port m = d.boundary()[c];
            boundary[c] = (m.on_boundary() || removed[m.node] < 0) ? mapped(m) : resolve(m);
        }
    int circles = d.free_circles();
    for (const auto& rm : removals)
        for (int s = 0; s < 4; ++s) {
            if (seen[rm.node][s]) continue;
            Port q{rm.node, s};
            const Port start = q;
            do {
                seen[q.node][q.slot] = 1;
                Port r{q.node, removals[removed[q.node]].pair[q.slot]};
                seen[r.node][r.slot] = 1;
                q = d.mate(r);
            } while (!(q == start));
            ++circles;
        }
    return Diagram::from_parts(std::move(nodes), boundary, d.is_open(), circles);
}

}  // namespace ravel
