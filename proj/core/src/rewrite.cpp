#include "ravel/rewrite.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ravel/moves.hpp"

namespace ravel {

const char* to_string(RewriteMove m) {
    switch (m) {
    case RewriteMove::UntwistAtClosingVertex: return "UntwistAtClosingVertex";
    case RewriteMove::UntwistAtVertex: return "UntwistAtVertex";
    case RewriteMove::FlipSubtangle: return "FlipSubtangle";
    case RewriteMove::ReidemeisterI: return "ReidemeisterI";
    case RewriteMove::ReidemeisterII: return "ReidemeisterII";
    case RewriteMove::RelocateVertexBox3to2: return "RelocateVertexBox3to2";
    case RewriteMove::ShiftFirstBoxCrossingsLeft: return "ShiftFirstBoxCrossingsLeft";
    }
    return "?";
}

namespace {

int md(int s) { return ((s % 4) + 4) % 4; }

std::string port_str(Port p) { return std::to_string(p.node) + "." + std::to_string(p.slot); }

struct FaceIndex {
    std::vector<std::vector<Port>> list;
    std::vector<std::array<int, 4>> id;

    explicit FaceIndex(const Diagram& d) : list(faces(d)), id(d.node_count(), {-1, -1, -1, -1}) {
        for (int f = 0; f < static_cast<int>(list.size()); ++f)
            for (const Port& p : list[f]) id[p.node][p.slot] = f;
    }
    int at(Port dart) const { return id[dart.node][dart.slot]; }
    // face on the far side of the arc leaving along `dart`
    int across(Port dart) const { return id[dart.node][md(dart.slot + 1)]; }
};

std::string state_key(const Diagram& d) {
    std::string k;
    for (const Node& n : d.nodes()) {
        k.push_back(n.over02 ? 'o' : 'u');
        k.push_back(n.is_vertex() ? 'v' : 'x');
        for (const Port& m : n.mate) {
            k += std::to_string(m.node);
            k.push_back(',');
            k.push_back(static_cast<char>('0' + m.slot));
        }
    }
    return k;
}

// A crossing c whose corner k faces a ball S. Ports: k = X.NE and k-1 = X.SE
// run into S, k+1 = X.NW and k+2 = X.SW run elsewhere. The flip turns S over
// about its east-west axis and carries c across to its east side.
struct FlipPlan {
    std::vector<char> in_ball;
    Diagram result;
};

std::optional<FlipPlan> plan_flip(const Diagram& d, const FaceIndex& fx, const RewriteStep& st) {
    if (d.is_open()) return std::nullopt;
    const int c = st.node, k = st.slot;
    if (c < 0 || c >= d.node_count() || k < 0 || k > 3 || !d.node(c).is_crossing()) return std::nullopt;
    const Port x_ne{c, k}, x_se{c, md(k - 1)}, x_nw{c, md(k + 1)}, x_sw{c, md(k + 2)};
    const int f0 = fx.at(x_ne), ftop = fx.at(x_nw), fbot = fx.at(x_se);
    if (f0 == ftop || f0 == fbot || ftop == fbot) return std::nullopt;
    const Port top = st.top, bottom = st.bottom;
    if (top.on_boundary() || bottom.on_boundary() || top.node >= d.node_count() || bottom.node >= d.node_count())
        return std::nullopt;
    if (fx.at(top) != ftop || fx.at(bottom) != fbot) return std::nullopt;
    const int f3 = fx.across(top);
    if (fx.across(bottom) != f3 || f3 == f0 || f3 == ftop || f3 == fbot) return std::nullopt;

    const Port top_far = d.mate(top), bottom_far = d.mate(bottom);
    const Port s_nw = d.mate(x_ne), s_sw = d.mate(x_se), o_nw = d.mate(x_nw), o_sw = d.mate(x_sw);
    for (Port p : {top, top_far, bottom, bottom_far, s_nw, s_sw, o_nw, o_sw})
        if (p.node == c) return std::nullopt;

    const int n = d.node_count();
    std::vector<std::array<char, 4>> cut(n, {0, 0, 0, 0});
    for (Port p : {x_ne, x_se, s_nw, s_sw, top, top_far, bottom, bottom_far}) cut[p.node][p.slot] = 1;
    FlipPlan plan;
    plan.in_ball.assign(n, 0);
    std::vector<int> stack{s_nw.node};
    plan.in_ball[s_nw.node] = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s) {
            if (cut[u][s]) continue;
            const int w = d.node(u).mate[s].node;
            if (w == c) return std::nullopt;
            if (!plan.in_ball[w]) {
                plan.in_ball[w] = 1;
                stack.push_back(w);
            }
        }
    }
    const auto& in = plan.in_ball;
    if (!in[s_sw.node]) return std::nullopt;
    if (in[top.node] == in[top_far.node] || in[bottom.node] == in[bottom_far.node]) return std::nullopt;
    const Port s_ne = in[top.node] ? top : top_far, out_ne = in[top.node] ? top_far : top;
    const Port s_se = in[bottom.node] ? bottom : bottom_far, out_se = in[bottom.node] ? bottom_far : bottom;
    if (s_ne == s_se || s_ne == s_nw || s_ne == s_sw || s_se == s_nw || s_se == s_sw) return std::nullopt;

    auto rel = [&](Port p) { return in[p.node] ? Port{p.node, md(-p.slot)} : p; };
    std::vector<Node> nodes = d.nodes();
    for (int u = 0; u < n; ++u) {
        if (!in[u]) continue;
        const Node& old = d.node(u);
        Node& nw = nodes[u];
        for (int s = 0; s < 4; ++s) nw.mate[md(-s)] = rel(old.mate[s]);
        if (nw.is_crossing()) nw.over02 = !old.over02;
    }
    auto link = [&](Port a, Port b) {
        nodes[a.node].mate[a.slot] = b;
        nodes[b.node].mate[b.slot] = a;
    };
    link(o_nw, rel(s_sw));
    link(o_sw, rel(s_nw));
    link(rel(s_se), x_nw);
    link(rel(s_ne), x_sw);
    link(x_ne, out_ne);
    link(x_se, out_se);
    try {
        plan.result = Diagram::from_parts(std::move(nodes), {}, false, d.free_circles());
    } catch (const std::logic_error&) {
        return std::nullopt;
    }
    if (!euler_check(plan.result)) return std::nullopt;
    return plan;
}

std::vector<std::pair<RewriteStep, FlipPlan>> all_flips(const Diagram& d) {
    std::vector<std::pair<RewriteStep, FlipPlan>> out;
    if (d.is_open() || d.node_count() < 2) return out;
    const FaceIndex fx(d);
    for (int c = 0; c < d.node_count(); ++c) {
        if (!d.node(c).is_crossing()) continue;
        for (int k = 0; k < 4; ++k) {
            const int ftop = fx.at({c, md(k + 1)}), fbot = fx.at({c, md(k - 1)});
            for (const Port& t : fx.list[ftop]) {
                const int f3 = fx.across(t);
                for (const Port& b : fx.list[fbot]) {
                    if (fx.across(b) != f3) continue;
                    RewriteStep st;
                    st.move = RewriteMove::FlipSubtangle;
                    st.node = c;
                    st.slot = k;
                    st.top = t;
                    st.bottom = b;
                    if (auto p = plan_flip(d, fx, st)) out.push_back({st, std::move(*p)});
                }
            }
        }
    }
    return out;
}

bool untwist_at(const Diagram& d, int c, int s, int* vertex) {
    if (c < 0 || c >= d.node_count() || s < 0 || s > 3 || !d.node(c).is_crossing()) return false;
    // bigon: leave c along s into vertex v, turn, come back into c at s - 1
    const Port q = d.mate({c, s});
    if (q.on_boundary() || q.node == c || !d.node(q.node).is_vertex()) return false;
    if (d.mate({q.node, md(q.slot + 1)}) != Port{c, md(s - 1)}) return false;
    if (vertex) *vertex = q.node;
    return true;
}

Diagram apply_untwist(const Diagram& d, int c, int s) {
    std::array<int, 4> pair{};
    const int a = md(s - 1), b = md(s + 2);
    pair[a] = b;
    pair[b] = a;
    pair[s] = md(s + 1);
    pair[md(s + 1)] = s;
    return remove_nodes(d, {{c, pair}});
}

std::optional<RewriteStep> find_macro_flip(const Diagram& d, const RewriteStep& st) {
    const bool relocate = st.move == RewriteMove::RelocateVertexBox3to2;
    int c = -1;
    for (int i = 0; i < d.node_count(); ++i) {
        const Node& n = d.node(i);
        if (!n.is_crossing() || n.tag.summand != st.summand || n.tag.closing) continue;
        if (relocate ? n.tag.box != 2 : n.tag.box != 1) continue;
        if (c < 0 || n.tag.pos < d.node(c).tag.pos) c = i;
    }
    if (c < 0) return std::nullopt;
    std::vector<char> want(d.node_count(), 0);
    for (int i = 0; i < d.node_count(); ++i) {
        const NodeTag& t = d.node(i).tag;
        if (t.closing) continue;
        want[i] = relocate ? (t.summand == st.summand && t.box >= 3) : (t.summand >= 1 && t.summand < st.summand);
    }
    for (auto& [step, plan] : all_flips(d))
        if (step.node == c && plan.in_ball == want) return step;
    return std::nullopt;
}

}  // namespace

std::string RewriteStep::str() const {
    std::ostringstream os;
    os << to_string(move);
    switch (move) {
    case RewriteMove::ReidemeisterI: os << " node=" << node; break;
    case RewriteMove::FlipSubtangle:
        os << " node=" << node << " corner=" << slot << " top=" << port_str(top) << " bottom=" << port_str(bottom);
        break;
    case RewriteMove::RelocateVertexBox3to2:
    case RewriteMove::ShiftFirstBoxCrossingsLeft: os << " summand=" << summand; break;
    default: os << " node=" << node << " slot=" << slot; break;
    }
    return os.str();
}

std::string RewriteTrace::str() const {
    std::ostringstream os;
    os << "# crossings " << initial_crossings << " -> " << final_crossings << "\n";
    for (const auto& s : steps) os << s.str() << "\n";
    return os.str();
}

Diagram apply_move(const Diagram& d, const RewriteStep& st) {
    auto bad = [&](const char* why) { return std::invalid_argument(st.str() + ": " + why); };
    switch (st.move) {
    case RewriteMove::UntwistAtClosingVertex:
    case RewriteMove::UntwistAtVertex: {
        int v = -1;
        if (!untwist_at(d, st.node, st.slot, &v)) throw bad("no crossing-vertex bigon");
        const bool closing = d.node(v).tag.closing;
        if (closing != (st.move == RewriteMove::UntwistAtClosingVertex)) throw bad("wrong kind of vertex");
        return apply_untwist(d, st.node, st.slot);
    }
    case RewriteMove::ReidemeisterI:
        if (st.node < 0 || st.node >= d.node_count() || !is_kink(d, st.node)) throw bad("no kink");
        return apply_r1(d, st.node);
    case RewriteMove::ReidemeisterII:
        if (st.node < 0 || st.node >= d.node_count() || st.slot < 0 || st.slot > 3 ||
            !is_r2_bigon(d, {st.node, st.slot}))
            throw bad("no removable bigon");
        return apply_r2(d, {st.node, st.slot});
    case RewriteMove::FlipSubtangle: {
        if (d.is_open()) throw bad("flips need a closed diagram");
        const FaceIndex fx(d);
        auto p = plan_flip(d, fx, st);
        if (!p) throw bad("no flippable ball");
        return std::move(p->result);
    }
    case RewriteMove::RelocateVertexBox3to2:
    case RewriteMove::ShiftFirstBoxCrossingsLeft: {
        if (d.is_open()) throw bad("flips need a closed diagram");
        auto flip = find_macro_flip(d, st);
        if (!flip) throw bad("no matching ball");
        return apply_move(d, *flip);
    }
    }
    throw bad("unknown move");
}

Diagram replay(const Diagram& d, const RewriteTrace& trace) {
    Diagram cur = d;
    for (const auto& s : trace.steps) cur = apply_move(cur, s);
    return cur;
}

std::vector<RewriteStep> untwist_sites(const Diagram& d) {
    std::vector<RewriteStep> out;
    for (int c = 0; c < d.node_count(); ++c)
        for (int s = 0; s < 4; ++s) {
            int v = -1;
            if (!untwist_at(d, c, s, &v)) continue;
            RewriteStep st;
            st.move = d.node(v).tag.closing ? RewriteMove::UntwistAtClosingVertex : RewriteMove::UntwistAtVertex;
            st.node = c;
            st.slot = s;
            out.push_back(st);
        }
    return out;
}

std::vector<RewriteStep> flip_sites(const Diagram& d) {
    std::vector<RewriteStep> out;
    for (auto& f : all_flips(d)) out.push_back(f.first);
    return out;
}

std::vector<int> flip_ball(const Diagram& d, const RewriteStep& flip) {
    if (d.is_open()) throw std::invalid_argument("flips need a closed diagram");
    const FaceIndex fx(d);
    auto p = plan_flip(d, fx, flip);
    if (!p) throw std::invalid_argument(flip.str() + ": no flippable ball");
    std::vector<int> out;
    for (int i = 0; i < d.node_count(); ++i)
        if (p->in_ball[i]) out.push_back(i);
    return out;
}

namespace {

class Search {
public:
    explicit Search(int budget) : budget_(budget) {}

    // Untwists and R1/R2 until none applies or the budget runs out.
    void greedy(Diagram& d, std::vector<RewriteStep>& log) {
        while (used_ < budget_ && d.crossing_count() > 0) {
            std::optional<RewriteStep> st;
            if (auto k = kink_sites(d); !k.empty()) {
                st = RewriteStep{};
                st->move = RewriteMove::ReidemeisterI;
                st->node = k.front();
            } else if (auto u = untwist_sites(d); !u.empty()) {
                st = u.front();
            } else if (!d.is_open()) {
                if (auto r = r2_sites(d); !r.empty()) {
                    st = RewriteStep{};
                    st->move = RewriteMove::ReidemeisterII;
                    st->node = r.front().node;
                    st->slot = r.front().slot;
                }
            }
            if (!st) return;
            d = apply_move(d, *st);
            log.push_back(*st);
            ++used_;
        }
    }

    bool deepen(const Diagram& cur, int depth, int target, std::vector<RewriteStep>& path, Diagram& out,
                std::vector<RewriteStep>& tail) {
        std::set<std::string> seen{state_key(cur)};
        for (auto& [step, plan] : all_flips(cur)) {
            if (used_ >= budget_) return false;
            if (!seen.insert(state_key(plan.result)).second) continue;
            ++used_;
            path.push_back(step);
            Diagram g = plan.result;
            std::vector<RewriteStep> log;
            greedy(g, log);
            if (g.crossing_count() < target) {
                out = std::move(g);
                tail = std::move(log);
                return true;
            }
            if (depth > 1 && deepen(plan.result, depth - 1, target, path, out, tail)) return true;
            path.pop_back();
        }
        return false;
    }

    int used() const { return used_; }
    bool exhausted() const { return used_ >= budget_; }

private:
    int budget_;
    int used_ = 0;
};

}  // namespace

PlanarityResult planarity_search(const Diagram& d0, int budget) {
    if (d0.is_open()) throw std::invalid_argument("planarity search needs a closed diagram");
    PlanarityResult r;
    r.trace.initial_crossings = d0.crossing_count();
    Search s(budget);
    Diagram d = d0;
    s.greedy(d, r.trace.steps);
    while (d.crossing_count() > 0 && !s.exhausted()) {
        bool progressed = false;
        for (int depth = 1; depth <= 3 && !progressed && !s.exhausted(); ++depth) {
            std::vector<RewriteStep> path, tail;
            Diagram next;
            if (s.deepen(d, depth, d.crossing_count(), path, next, tail)) {
                r.trace.steps.insert(r.trace.steps.end(), path.begin(), path.end());
                r.trace.steps.insert(r.trace.steps.end(), tail.begin(), tail.end());
                d = std::move(next);
                progressed = true;
            }
        }
        if (!progressed) break;
        s.greedy(d, r.trace.steps);
    }
    r.trace.final_crossings = d.crossing_count();
    r.certified = d.crossing_count() == 0;
    r.steps_used = s.used();
    r.final = std::move(d);
    return r;
}

}  // namespace ravel
