#include "ravel/constituents.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ravel {

VertexGraph vertex_graph(const Diagram& d) {
    if (d.is_open()) throw std::invalid_argument("constituent links need a closed diagram");
    VertexGraph g;
    g.free_circles = d.free_circles();
    const ArcTable arcs = d.arcs();
    std::vector<std::array<char, 4>> port_used(d.node_count(), {0, 0, 0, 0});
    std::vector<std::array<char, 2>> pass_used(d.node_count(), {0, 0});
    auto arcs_of = [&](const Walk& w) {
        std::vector<int> a;
        for (const Port& p : w.leaving) a.push_back(arcs.of(p));
        for (const auto& ps : w.passages) pass_used[ps.node][ps.in % 2] = 1;
        return a;
    };
    for (int v = 0; v < d.node_count(); ++v) {
        if (!d.node(v).is_vertex()) continue;
        g.vertices.push_back(v);
        for (int s = 0; s < 4; ++s) {
            if (port_used[v][s]) continue;
            Walk w = walk_from(d, {v, s});
            port_used[v][s] = 1;
            port_used[w.end.node][w.end.slot] = 1;
            GraphEdge e{w.start, w.end, w.passages, arcs_of(w)};
            g.edges.push_back(std::move(e));
        }
    }
    for (int i = 0; i < d.node_count(); ++i) {
        if (!d.node(i).is_crossing()) continue;
        for (int k = 0; k < 2; ++k) {
            if (pass_used[i][k]) continue;
            Walk w = walk_from(d, {i, k});
            auto a = arcs_of(w);
            g.strand_arcs.push_back(std::move(a));
            g.strands.push_back(std::move(w));
        }
    }
    return g;
}

std::vector<Cycle> enumerate_cycles(const VertexGraph& g) {
    std::vector<Cycle> out;
    std::map<int, int> index;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = static_cast<int>(i);
    const int nv = static_cast<int>(g.vertices.size());
    std::vector<std::vector<std::pair<int, int>>> adj(nv);  // (edge, other vertex index)
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const int u = index.at(g.edges[e].a.node), w = index.at(g.edges[e].b.node);
        if (u == w) {
            Cycle c;
            c.edges = {e};
            c.vertices = {g.vertices[u]};
            out.push_back(std::move(c));
            continue;
        }
        adj[u].push_back({e, w});
        adj[w].push_back({e, u});
    }
    std::set<std::vector<int>> seen;
    std::vector<int> path;
    std::vector<int> on_path(nv, 0);
    std::vector<char> edge_used(g.edges.size(), 0);
    auto record = [&](std::vector<int> edges) {
        std::vector<int> key = edges;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) return;
        Cycle c;
        c.edges = std::move(edges);
        std::set<int> vs;
        for (int e : c.edges) {
            vs.insert(g.edges[e].a.node);
            vs.insert(g.edges[e].b.node);
        }
        c.vertices.assign(vs.begin(), vs.end());
        out.push_back(std::move(c));
    };
    for (int s = 0; s < nv; ++s) {
        auto dfs = [&](auto&& self, int v) -> void {
            for (auto [e, w] : adj[v]) {
                if (edge_used[e]) continue;
                if (w == s) {
                    if (!path.empty()) {
                        auto cyc = path;
                        cyc.push_back(e);
                        record(std::move(cyc));
                    }
                    continue;
                }
                if (w < s || on_path[w]) continue;
                on_path[w] = 1;
                edge_used[e] = 1;
                path.push_back(e);
                self(self, w);
                path.pop_back();
                edge_used[e] = 0;
                on_path[w] = 0;
            }
        };
        on_path[s] = 1;
        dfs(dfs, s);
        on_path[s] = 0;
    }
    for (int i = 0; i < static_cast<int>(g.strands.size()); ++i) {
        Cycle c;
        c.kind = Cycle::Kind::Strand;
        c.strand = i;
        out.push_back(std::move(c));
    }
    for (int i = 0; i < g.free_circles; ++i) {
        Cycle c;
        c.kind = Cycle::Kind::FreeCircle;
        out.push_back(std::move(c));
    }
    return out;
}

ConstituentSet constituent_links(const Diagram& d, std::size_t cap) {
    ConstituentSet set;
    set.graph = vertex_graph(d);
    set.cycles = enumerate_cycles(set.graph);
    const int nc = static_cast<int>(set.cycles.size());
    auto disjoint = [&](int i, int j) {
        const auto& a = set.cycles[i].vertices;
        const auto& b = set.cycles[j].vertices;
        std::size_t x = 0, y = 0;
        while (x < a.size() && y < b.size()) {
            if (a[x] == b[y]) return false;
            a[x] < b[y] ? ++x : ++y;
        }
        return true;
    };
    std::vector<int> cur;
    auto rec = [&](auto&& self, int from) -> void {
        for (int j = from; j < nc; ++j) {
            bool ok = true;
            for (int i : cur)
                if (!disjoint(i, j)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.push_back(j);
            if (set.links.size() >= cap) throw std::length_error("constituent link enumeration exceeded its cap");
            set.links.push_back({cur});
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return set;
}

PDCode extract_pd(const Diagram& d, const ConstituentSet& set, const ConstituentLink& link) {
    std::vector<std::vector<Passage>> comps;
    for (int ci : link.cycles) {
        const Cycle& c = set.cycles.at(ci);
        std::vector<Passage> seq;
        if (c.kind == Cycle::Kind::Graph) {
            int cur = c.vertices.front();
            if (c.edges.size() == 1) cur = set.graph.edges[c.edges[0]].a.node;
            for (int e : c.edges) {
                const GraphEdge& ge = set.graph.edges[e];
                if (ge.a.node == cur) {
                    seq.insert(seq.end(), ge.passages.begin(), ge.passages.end());
                    cur = ge.b.node;
                } else {
                    for (auto it = ge.passages.rbegin(); it != ge.passages.rend(); ++it)
                        seq.push_back({it->node, (it->in + 2) % 4});
                    cur = ge.a.node;
                }
            }
        } else if (c.kind == Cycle::Kind::Strand) {
            seq = set.graph.strands.at(c.strand).passages;
        }
        comps.push_back(std::move(seq));
    }
    std::vector<std::array<int, 2>> uses(d.node_count(), {0, 0});
    for (const auto& seq : comps)
        for (const auto& p : seq) ++uses[p.node][p.in % 2];
    auto survives = [&](int node) { return uses[node][0] > 0 && uses[node][1] > 0; };

    std::vector<std::array<int, 4>> label(d.node_count(), {0, 0, 0, 0});
    std::vector<int> order;
    std::vector<char> listed(d.node_count(), 0);
    int next_label = 1;
    int crossingless = 0;
    for (const auto& seq : comps) {
        std::vector<Passage> kept;
        for (const auto& p : seq)
            if (survives(p.node)) kept.push_back(p);
        const int m = static_cast<int>(kept.size());
        if (m == 0) {
            ++crossingless;
            continue;
        }
        for (int j = 0; j < m; ++j) {
            const Passage& p = kept[j];
            label[p.node][p.in] = next_label + j;
            label[p.node][(p.in + 2) % 4] = next_label + (j + 1) % m;
            if (!listed[p.node]) {
                listed[p.node] = 1;
                order.push_back(p.node);
            }
        }
        next_label += m;
    }
    // which slot did the under-strand enter by?
    std::vector<int> under_in(d.node_count(), -1), over_in(d.node_count(), -1);
    for (const auto& seq : comps)
        for (const auto& p : seq) {
            if (!survives(p.node)) continue;
            const bool over = d.node(p.node).over(p.in);
            (over ? over_in : under_in)[p.node] = p.in;
        }
    PDCode pd;
    for (int node : order) {
        const int u = under_in[node];
        const auto& l = label[node];
        pd.crossings.push_back({l[u], l[(u + 1) % 4], l[(u + 2) % 4], l[(u + 3) % 4]});
        pd.signs.push_back(over_in[node] == (u + 3) % 4 ? 1 : -1);
    }
    pd.components = static_cast<int>(comps.size());
    pd.crossingless = crossingless;
    return pd;
}

std::vector<int> cycle_arcs(const ConstituentSet& set, int cycle) {
    const Cycle& c = set.cycles.at(cycle);
    std::vector<int> arcs;
    if (c.kind == Cycle::Kind::Graph) {
        for (int e : c.edges) {
            const auto& a = set.graph.edges[e].arcs;
            arcs.insert(arcs.end(), a.begin(), a.end());
        }
    } else if (c.kind == Cycle::Kind::Strand) {
        arcs = set.graph.strand_arcs.at(c.strand);
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    return arcs;
}

}  // namespace ravel
