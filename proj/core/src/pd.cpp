#include "ravel/pd.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ravel {

std::string to_text(const PDCode& pd) {
    std::ostringstream os;
    for (const auto& x : pd.crossings) os << "X " << x[0] << ' ' << x[1] << ' ' << x[2] << ' ' << x[3] << '\n';
    for (int i = 0; i < pd.crossingless; ++i) os << "O\n";
    return os.str();
}

PDCode parse_pd(std::string_view text) {
    std::vector<std::array<int, 4>> xs;
    int loops = 0;
    std::istringstream is{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "O") {
            ++loops;
        } else if (tag == "X") {
            std::array<int, 4> x{};
            for (int& v : x)
                if (!(ls >> v)) throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 4 labels");
            xs.push_back(x);
        } else {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown record '" + tag + "'");
        }
        std::string extra;
        if (ls >> extra) throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing text");
    }
    return normalize_pd(std::move(xs), loops);
}

PDCode normalize_pd(std::vector<std::array<int, 4>> crossings, int crossingless) {
    PDCode pd;
    pd.crossings = std::move(crossings);
    pd.crossingless = crossingless;
    const int n = pd.size();
    const int labels = 2 * n;
    std::vector<int> count(labels + 1, 0);
    for (const auto& x : pd.crossings)
        for (int v : x) {
            if (v < 1 || v > labels) throw std::invalid_argument("PD label " + std::to_string(v) + " out of range");
            ++count[v];
        }
    for (int v = 1; v <= labels; ++v)
        if (count[v] != 2) throw std::invalid_argument("PD label " + std::to_string(v) + " does not appear twice");

    std::vector<int> parent(labels + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& x : pd.crossings) {
        parent[find(x[0])] = find(x[2]);
        parent[find(x[1])] = find(x[3]);
    }
    std::vector<int> lo(labels + 1, labels + 1), hi(labels + 1, 0), size(labels + 1, 0);
    for (int v = 1; v <= labels; ++v) {
        int r = find(v);
        lo[r] = std::min(lo[r], v);
        hi[r] = std::max(hi[r], v);
        ++size[r];
    }
    int comps = 0;
    for (int v = 1; v <= labels; ++v) {
        if (find(v) != v) continue;
        ++comps;
        if (hi[v] - lo[v] + 1 != size[v]) throw std::invalid_argument("PD component labels are not consecutive");
    }
    pd.components = comps + crossingless;
    auto next = [&](int v) {
        int r = find(v);
        return v == hi[r] ? lo[r] : v + 1;
    };
    // Two-label components: the label order does not fix the direction, so read
    // it off a crossing where the component passes under.
    std::vector<int> incoming_under(labels + 1, 0);
    for (const auto& x : pd.crossings) incoming_under[find(x[0])] = x[0];
    pd.signs.clear();
    for (const auto& x : pd.crossings) {
        const int b = x[1], d = x[3];
        const int r = find(b);
        bool positive;
        if (size[r] >= 3) {
            positive = next(d) == b;
            if (!positive && next(b) != d) throw std::invalid_argument("PD over-strand labels are not adjacent");
        } else if (size[r] == 2 && incoming_under[r] != 0 && b != d) {
            // the segment leaving the under-crossing is the one entering here
            const int entering = next(incoming_under[r]);
            positive = d == entering;
        } else {
            positive = true;
        }
        pd.signs.push_back(positive ? 1 : -1);
    }
    return pd;
}

PDCode mirror(const PDCode& pd) {
    std::vector<std::array<int, 4>> xs;
    for (int i = 0; i < pd.size(); ++i) {
        const auto& x = pd.crossings[i];
        if (pd.signs[i] > 0)
            xs.push_back({x[3], x[0], x[1], x[2]});
        else
            xs.push_back({x[1], x[2], x[3], x[0]});
    }
    PDCode m = pd;
    m.crossings = std::move(xs);
    for (int& s : m.signs) s = -s;
    return m;
}

Diagram pd_to_diagram(const PDCode& pd) {
    const int n = pd.size();
    std::vector<Node> nodes(n);
    std::vector<std::vector<Port>> at(2 * n + 1);
    for (int i = 0; i < n; ++i) {
        nodes[i].kind = NodeKind::Crossing;
        nodes[i].over02 = false;
        for (int s = 0; s < 4; ++s) at[pd.crossings[i][s]].push_back({i, s});
    }
    for (int v = 1; v <= 2 * n; ++v) {
        const Port a = at[v][0], b = at[v][1];
        nodes[a.node].mate[a.slot] = b;
        nodes[b.node].mate[b.slot] = a;
    }
    return Diagram::from_parts(std::move(nodes), {}, false, pd.crossingless);
}

bool is_alternating(const PDCode& pd) {
    std::vector<int> under(2 * pd.size() + 1, 0);
    for (const auto& x : pd.crossings) ++under[x[0]], ++under[x[2]];
    for (int v = 1; v <= 2 * pd.size(); ++v)
        if (under[v] != 1) return false;
    return true;
}

bool is_reduced(const PDCode& pd) {
    const Diagram d = pd_to_diagram(pd);
    const int n = d.node_count();
    // face of the corner before slot s, traced as in the rest of the library
    std::vector<int> face(4 * n, -1);
    int faces = 0;
    for (int i = 0; i < 4 * n; ++i) {
        if (face[i] >= 0) continue;
        Port p{i / 4, i % 4};
        do {
            face[4 * p.node + p.slot] = faces;
            const Port q = d.mate(p);
            p = {q.node, (q.slot + 1) % 4};
        } while (!(p == Port{i / 4, i % 4}));
        ++faces;
    }
    for (int c = 0; c < n; ++c)
        for (int s = 0; s < 4; ++s)
            for (int t = s + 1; t < 4; ++t)
                if (face[4 * c + s] == face[4 * c + t]) return false;
    return true;
}

bool is_connected_diagram(const PDCode& pd) {
    if (pd.crossingless > 0) return pd.size() == 0 && pd.crossingless == 1;
    if (pd.size() == 0) return true;
    const Diagram d = pd_to_diagram(pd);
    std::vector<bool> seen(d.node_count(), false);
    std::vector<int> stack{0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
            const int v = d.node(u).mate[s].node;
            if (!seen[v]) seen[v] = true, ++count, stack.push_back(v);
        }
    }
    return count == d.node_count();
}

}  // namespace ravel
