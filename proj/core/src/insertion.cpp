#include "ravel/insertion.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ravel {

std::string CrossingAddress::str() const {
    return "v(" + std::to_string(summand) + "," + std::to_string(box) + "," + std::to_string(pos) + ")";
}

namespace {

int vertices_in(const BraidBox& b) {
    return static_cast<int>(std::count_if(b.slots.begin(), b.slots.end(), [](const BraidSlot& s) { return s.vertex; }));
}

int crossings_in(const BraidBox& b) { return static_cast<int>(b.slots.size()) - vertices_in(b); }

std::vector<BraidBox> braid_of(const BoxVector& t) {
    std::vector<BraidBox> out;
    if (t.is_infinity()) return out;
    for (int k = 0; k < t.box_count(); ++k) {
        const int a = t.boxes()[k];
        BraidBox b;
        b.sign = a < 0 ? -1 : 1;
        b.index = k + 1;
        for (int p = 1; p <= std::abs(a); ++p) b.slots.push_back({false, p});
        out.push_back(std::move(b));
    }
    return out;
}

// position of the rightmost vertex box in the box list, -1 if none
int rightmost_vertex_at(const std::vector<BraidBox>& boxes) {
    for (int k = static_cast<int>(boxes.size()) - 1; k >= 0; --k)
        if (vertices_in(boxes[k]) > 0) return k;
    return -1;
}

}  // namespace

int DecoratedSummand::vertex_count() const {
    int v = 0;
    for (const auto& b : boxes) v += vertices_in(b);
    return v;
}

int DecoratedSummand::crossing_count() const {
    int c = 0;
    for (const auto& b : boxes) c += crossings_in(b);
    return c;
}

std::vector<CrossingAddress> DecoratedSummand::vertices(int summand) const {
    std::vector<CrossingAddress> out;
    for (const auto& b : boxes)
        for (const auto& s : b.slots)
            if (s.vertex) out.push_back({summand, b.index, s.pos});
    return out;
}

int DecoratedSummand::rightmost_vertex_box() const {
    const int k = rightmost_vertex_at(boxes);
    return k < 0 ? 0 : boxes[k].index;
}

int DecoratedSummand::leftmost_vertex_box() const {
    for (const auto& b : boxes)
        if (vertices_in(b) > 0) return b.index;
    return 0;
}

int DecoratedSummand::crossings_right_of_rightmost_vertex() const {
    const int k = rightmost_vertex_at(boxes);
    if (k < 0) return 0;
    int c = 0;
    // inside the vertex's own box, crossings right of the last vertex count too
    const auto& own = boxes[k].slots;
    for (auto it = own.rbegin(); it != own.rend() && !it->vertex; ++it) ++c;
    for (std::size_t j = k + 1; j < boxes.size(); ++j) c += crossings_in(boxes[j]);
    return c;
}

Diagram DecoratedSummand::diagram(int summand) const {
    if (is_infinity()) return build_tangle_diagram(original, summand);
    return build_braid_diagram(boxes, summand);
}

int DecoratedPresentation::vertex_count() const {
    int v = 0;
    for (const auto& s : summands) v += s.vertex_count();
    return v;
}

std::optional<CrossingAddress> DecoratedPresentation::rightmost_vertex(int i) const {
    auto v = summand(i).vertices(i);
    if (v.empty()) return std::nullopt;
    return v.back();
}

std::optional<CrossingAddress> DecoratedPresentation::leftmost_vertex(int i) const {
    auto v = summand(i).vertices(i);
    if (v.empty()) return std::nullopt;
    return v.front();
}

DecoratedPresentation DecoratedPresentation::mirrored() const {
    DecoratedPresentation d = *this;
    d.presentation = presentation.mirrored();
    for (auto& s : d.summands) {
        s.original = s.original.mirrored();
        for (auto& b : s.boxes) b.sign = -b.sign;
    }
    return d;
}

Diagram DecoratedPresentation::diagram() const {
    if (summands.empty()) throw std::invalid_argument("presentation has no summands");
    Diagram d = summands[0].diagram(1);
    for (int i = 1; i < size(); ++i) d = compose_sum(d, summands[i].diagram(i + 1));
    return d;
}

Diagram DecoratedPresentation::closure() const { return vertex_closure(diagram()); }

DecoratedPresentation apply_insertion(const MontesinosPresentation& m, const VertexInsertion& v) {
    if (v.addresses.empty()) throw std::invalid_argument("vertex insertion is empty");
    DecoratedPresentation d;
    d.presentation = m;
    d.insertion = v;
    for (const auto& t : m.summands) d.summands.push_back({t, braid_of(t)});
    std::set<CrossingAddress> seen;
    for (const auto& a : v.addresses) {
        if (!seen.insert(a).second) throw std::invalid_argument("duplicate insertion address " + a.str());
        if (a.summand < 1 || a.summand > d.size()) throw std::invalid_argument("no summand for " + a.str());
        auto& boxes = d.summands[a.summand - 1].boxes;
        if (a.box < 1 || a.box > static_cast<int>(boxes.size())) throw std::invalid_argument("no box for " + a.str());
        auto& slots = boxes[a.box - 1].slots;
        if (a.pos < 1 || a.pos > static_cast<int>(slots.size())) throw std::invalid_argument("no crossing at " + a.str());
        slots[a.pos - 1].vertex = true;
    }
    return d;
}

DecoratedPresentation normalize_sa1(const DecoratedPresentation& d) {
    DecoratedPresentation out = d;
    for (auto& s : out.summands)
        for (auto& b : s.boxes) {
            if (vertices_in(b) == 0) continue;
            std::erase_if(b.slots, [](const BraidSlot& x) { return !x.vertex; });
        }
    return out;
}

DecoratedPresentation normalize_sa2(const DecoratedPresentation& d) {
    DecoratedPresentation out = d;
    for (auto& s : out.summands) {
        while (s.crossings_right_of_rightmost_vertex() == 1) {
            // the lone crossing is the last slot of the last box
            auto& last = s.boxes.back();
            last.slots.pop_back();
            if (last.slots.empty()) s.boxes.pop_back();
        }
    }
    return out;
}

DecoratedPresentation normalize(const DecoratedPresentation& d) { return normalize_sa2(normalize_sa1(d)); }

bool is_normalized(const DecoratedPresentation& d) {
    for (const auto& s : d.summands) {
        for (const auto& b : s.boxes)
            if (vertices_in(b) > 0 && crossings_in(b) > 0) return false;
        if (s.crossings_right_of_rightmost_vertex() == 1) return false;
    }
    return true;
}

BoxVector subtangle_right(const DecoratedPresentation& d, int i) {
    const auto& s = d.summand(i);
    const int k = rightmost_vertex_at(s.boxes);
    if (k < 0) throw std::invalid_argument("summand " + std::to_string(i) + " has no vertex");
    std::vector<int> boxes;
    for (std::size_t j = k + 1; j < s.boxes.size(); ++j)
        boxes.push_back(s.boxes[j].sign * static_cast<int>(s.boxes[j].slots.size()));
    if (boxes.empty()) return BoxVector{};
    return BoxVector(std::move(boxes));
}

bool has_loop_at(const DecoratedPresentation& d, int i) {
    const auto& s = d.summand(i);
    if (s.vertex_count() != 1) throw std::invalid_argument("loop test needs exactly one vertex in the summand");
    const Diagram g = s.diagram(i);
    for (int n = 0; n < g.node_count(); ++n) {
        if (!g.node(n).is_vertex()) continue;
        // slots 0 (NE) and 3 (SE) face the boxes to the right
        const Walk w = walk_from(g, {n, 0});
        return w.end == Port{n, 3};
    }
    return false;
}

std::string ExceptionalReport::summary() const {
    std::ostringstream os;
    os << (exceptional ? "exceptional" : "not exceptional");
    for (int c = 0; c < 4; ++c) {
        os << "; (" << c + 1 << ") " << (conditions[c].pass ? "pass" : "fail");
        if (!conditions[c].pass && conditions[c].summand) os << " at T" << conditions[c].summand;
        if (!conditions[c].note.empty()) os << ": " << conditions[c].note;
    }
    return os.str();
}

ExceptionalReport is_exceptional(const DecoratedPresentation& d) {
    if (!validate_standard_form(d.presentation).valid())
        throw std::invalid_argument("exceptional insertion needs a standard-form presentation");
    if (!is_normalized(d)) throw std::invalid_argument("insertion is not normalized (SA1, SA2)");

    ExceptionalReport r;
    const int n = d.size();
    std::vector<char> inf(n + 1, 0);
    int inf_count = 0;
    for (int i = 1; i <= n; ++i) {
        const auto& t = d.presentation.summands[i - 1];
        inf[i] = t.is_infinity() || parity(t) == Parity::Infinity;
        inf_count += inf[i];
    }

    auto fail = [](ConditionResult& c, int i, std::string note) {
        if (!c.pass) return;
        c.pass = false;
        c.summand = i;
        c.note = std::move(note);
    };
    for (auto& c : r.conditions) c.pass = true;

    if (inf_count != 1) {
        fail(r.conditions[0], 0, std::to_string(inf_count) + " summands with infinity parity");
    } else {
        for (int i = 1; i <= n; ++i)
            if (inf[i]) r.infinity_summand = i;
        if (d.summand(r.infinity_summand).vertex_count() > 0)
            fail(r.conditions[0], r.infinity_summand, "the infinity-parity summand carries a vertex");
    }

    for (int k = 1; k <= n; ++k) {
        if (inf[k]) continue;
        const auto& s = d.summand(k);
        const int nv = s.vertex_count();
        if (nv != 1) {
            fail(r.conditions[1], k, std::to_string(nv) + " vertices");
            fail(r.conditions[2], k, "no single vertex");
            fail(r.conditions[3], k, "no single vertex");
            continue;
        }
        const int box = s.rightmost_vertex_box();
        const bool box2_single = s.boxes.size() > 1 && crossings_in(s.boxes[1]) == 1;
        if (!(box == 2 || (box == 3 && box2_single))) fail(r.conditions[1], k, "vertex in box " + std::to_string(box));
        const int right = s.crossings_right_of_rightmost_vertex();
        if (right < 2) fail(r.conditions[2], k, std::to_string(right) + " crossings right of the vertex");
        if (!has_loop_at(d, k)) fail(r.conditions[3], k, "no loop through the vertex");
    }
    r.exceptional = std::all_of(r.conditions.begin(), r.conditions.end(), [](const ConditionResult& c) { return c.pass; });
    return r;
}

}  // namespace ravel
