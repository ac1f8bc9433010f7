#include "ravel/invariants.hpp"

#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "ravel/moves.hpp"

namespace ravel {

namespace {

const LaurentPoly& loop_value() {
    static const LaurentPoly d = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
    return d;
}

void check_cap(const PDCode& pd, int cap) {
    if (pd.size() > cap)
        throw std::length_error("bracket crossing budget exceeded: " + std::to_string(pd.size()) + " > " +
                                std::to_string(cap));
}

std::array<int, 4> a_pairing(const Node& n) {
    // A-smoothing joins the under-strand's incoming end to the next end counterclockwise
    const int u = n.over02 ? 1 : 0;
    std::array<int, 4> p{};
    p[u] = (u + 1) % 4;
    p[(u + 1) % 4] = u;
    p[(u + 2) % 4] = (u + 3) % 4;
    p[(u + 3) % 4] = (u + 2) % 4;
    return p;
}

std::array<int, 4> b_pairing(const Node& n) {
    const int u = n.over02 ? 1 : 0;
    std::array<int, 4> p{};
    p[(u + 1) % 4] = (u + 2) % 4;
    p[(u + 2) % 4] = (u + 1) % 4;
    p[(u + 3) % 4] = u;
    p[u] = (u + 3) % 4;
    return p;
}

std::string state_key(const Diagram& d) {
    std::string k;
    k.reserve(d.node_count() * 9 + 4);
    k.push_back(static_cast<char>(d.free_circles()));
    for (const Node& n : d.nodes()) {
        k.push_back(n.over02 ? 'o' : 'u');
        for (const Port& m : n.mate) {
            k.push_back(static_cast<char>(m.node & 0xff));
            k.push_back(static_cast<char>(m.slot));
        }
    }
    return k;
}

class SkeinEvaluator {
public:
    LaurentPoly eval(Diagram d) {
        LaurentPoly factor(1);
        for (;;) {
            bool changed = false;
            for (int i = 0; i < d.node_count(); ++i) {
                if (!is_kink(d, i)) continue;
                const Node& n = d.node(i);
                int s = 0;
                while (!(n.mate[s].node == i && n.mate[s].slot == (s + 1) % 4)) ++s;
                // the kink closes the loop between slots s and s+1
                const bool a_loop = a_pairing(n)[s] == (s + 1) % 4;
                factor = factor * LaurentPoly::monomial(-1, a_loop ? 3 : -3);
                d = remove_nodes(d, {{i, kStraight}});
                changed = true;
                break;
            }
            if (changed) continue;
            if (d.node_count() >= 2) {
                auto r2 = r2_sites(d);
                if (!r2.empty()) {
                    d = apply_r2(d, r2.front());
                    continue;
                }
            }
            break;
        }
        if (d.node_count() == 0) {
            const int loops = d.free_circles();
            if (loops == 0) return factor;
            return factor * pow(loop_value(), loops - 1);
        }
        std::string key = state_key(d);
        if (auto it = memo_.find(key); it != memo_.end()) return factor * it->second;

        const int c = pick(d);
        const Node& n = d.node(c);
        LaurentPoly r = LaurentPoly::monomial(1, 1) * eval(remove_nodes(d, {{c, a_pairing(n)}})) +
                        LaurentPoly::monomial(1, -1) * eval(remove_nodes(d, {{c, b_pairing(n)}}));
        if (memo_.size() < 200000) memo_.emplace(std::move(key), r);
        return factor * r;
    }

private:
    // Prefer crossings in twist regions: smoothing one leaves a kink behind.
    static int pick(const Diagram& d) {
        int best = 0, best_score = 5;
        for (int i = 0; i < d.node_count(); ++i) {
            int distinct = 0;
            std::array<int, 4> seen{-1, -1, -1, -1};
            for (const Port& m : d.node(i).mate) {
                bool dup = false;
                for (int k = 0; k < distinct; ++k) dup |= seen[k] == m.node;
                if (!dup) seen[distinct++] = m.node;
            }
            if (distinct < best_score) {
                best_score = distinct;
                best = i;
            }
        }
        return best;
    }

    std::unordered_map<std::string, LaurentPoly> memo_;
};

}  // namespace

LaurentPoly kauffman_bracket(const PDCode& pd, int max_crossings) {
    check_cap(pd, max_crossings);
    if (pd.size() == 0) return pd.components <= 1 ? LaurentPoly(1) : pow(loop_value(), pd.components - 1);
    SkeinEvaluator ev;
    return ev.eval(pd_to_diagram(pd));
}

LaurentPoly kauffman_bracket_state_sum(const PDCode& pd, int max_crossings) {
    check_cap(pd, max_crossings);
    const int n = pd.size();
    if (n == 0) return pd.components <= 1 ? LaurentPoly(1) : pow(loop_value(), pd.components - 1);
    if (n > 30) throw std::length_error("state sum is limited to 30 crossings");
    const int labels = 2 * n;
    // tally states by (A-exponent, loop count) first, then expand once
    std::vector<std::vector<std::int64_t>> tally(2 * n + 1, std::vector<std::int64_t>(labels + pd.crossingless + 2, 0));
    std::vector<int> parent(labels + 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        int a_count = 0;
        for (int i = 0; i < n; ++i) {
            const auto& x = pd.crossings[i];
            if (mask >> i & 1) {
                ++a_count;
                unite(x[0], x[1]);
                unite(x[2], x[3]);
            } else {
                unite(x[0], x[3]);
                unite(x[1], x[2]);
            }
        }
        int loops = pd.crossingless;
        for (int v = 1; v <= labels; ++v) loops += find(v) == v;
        ++tally[a_count][loops];
    }
    LaurentPoly total;
    for (int a = 0; a <= n; ++a)
        for (std::size_t loops = 1; loops < tally[a].size(); ++loops) {
            if (tally[a][loops] == 0) continue;
            total += LaurentPoly::monomial(tally[a][loops], a - (n - a)) *
                     pow(loop_value(), static_cast<int>(loops) - 1);
        }
    return total;
}

int writhe(const PDCode& pd) { return std::accumulate(pd.signs.begin(), pd.signs.end(), 0); }

LaurentPoly jones(const PDCode& pd, int max_crossings) {
    const int w = writhe(pd);
    return LaurentPoly::monomial(w % 2 == 0 ? 1 : -1, -3 * w) * kauffman_bracket(pd, max_crossings);
}

LaurentPoly unlink_jones(int components) { return components <= 1 ? LaurentPoly(1) : pow(loop_value(), components - 1); }

std::int64_t determinant(const PDCode& pd) {
    // t = -1 means A = exp(i pi / 4)
    const LaurentPoly v = jones(pd);
    std::complex<long double> z = 0;
    const long double pi = std::acos(-1.0L);
    for (auto [e, c] : v.terms()) z += static_cast<long double>(c) * std::polar(1.0L, pi * e / 4);
    return std::llround(std::abs(z));
}

const char* to_string(Triviality t) {
    switch (t) {
    case Triviality::Trivial: return "Trivial";
    case Triviality::Nontrivial: return "Nontrivial";
    case Triviality::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {

// Applies kinks and bigons until none is left; returns moves used.
int greedy_reduce(Diagram& d) {
    int moves = 0;
    for (;;) {
        auto k = kink_sites(d);
        if (!k.empty()) {
            d = apply_r1(d, k.front());
            ++moves;
            continue;
        }
        auto r2 = r2_sites(d);
        if (!r2.empty()) {
            d = apply_r2(d, r2.front());
            ++moves;
            continue;
        }
        return moves;
    }
}

bool lookahead(Diagram& d, int depth, int& budget, int& used) {
    if (depth == 0 || budget <= 0) return false;
    const int start = d.crossing_count();
    for (const Port& site : r3_sites(d)) {
        if (--budget <= 0) return false;
        Diagram e = apply_r3(d, site);
        ++used;
        Diagram reduced = e;
        int m = greedy_reduce(reduced);
        if (reduced.crossing_count() < start) {
            used += m;
            d = std::move(reduced);
            return true;
        }
        if (lookahead(e, depth - 1, budget, used) && e.crossing_count() < start) {
            d = std::move(e);
            return true;
        }
    }
    return false;
}

}  // namespace

bool reidemeister_unknotting(const Diagram& input, int budget, int* steps) {
    Diagram d = input;
    int used = greedy_reduce(d);
    while (d.crossing_count() > 0 && budget > 0) {
        bool progressed = false;
        for (int depth = 1; depth <= 3 && !progressed; ++depth) progressed = lookahead(d, depth, budget, used);
        if (!progressed) break;
        used += greedy_reduce(d);
    }
    if (steps) *steps = used;
    return d.crossing_count() == 0;
}

TrivialityReport triviality(const PDCode& pd, int components, int budget) {
    TrivialityReport r;
    r.jones = jones(pd);
    if (r.jones != unlink_jones(components)) {
        r.status = Triviality::Nontrivial;
        return r;
    }
    if (pd.size() == 0) {
        r.status = Triviality::Trivial;
        return r;
    }
    r.status = reidemeister_unknotting(pd_to_diagram(pd), budget, &r.reidemeister_steps) ? Triviality::Trivial
                                                                                          : Triviality::Inconclusive;
    return r;
}

Triviality is_trivial(const PDCode& pd, int components) { return triviality(pd, components).status; }

}  // namespace ravel
