#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

#include "ravel/tangle.hpp"

namespace ravel {

// Every node has four slots numbered counterclockwise. Crossing strands run
// straight through, joining slots 0-2 and 1-3. Inside a twist box the slots are
// 0 = NE, 1 = NW, 2 = SW, 3 = SE.
enum class NodeKind : std::uint8_t { Crossing, Vertex };

// Boundary corners of an open diagram, clockwise from the top left.
enum Corner : int { NW = 0, NE = 1, SE = 2, SW = 3 };

inline constexpr int kBoundary = -1;

struct Port {
    int node = kBoundary;  // kBoundary: slot is a Corner
    int slot = 0;
    bool on_boundary() const { return node < 0; }
    friend bool operator==(const Port&, const Port&) = default;
    friend auto operator<=>(const Port&, const Port&) = default;
};

// Provenance of a node inside a presentation (1-based, zero when unknown).
struct NodeTag {
    int summand = 0;
    int box = 0;
    int pos = 0;
    int leaf = -1;
    bool closing = false;
    friend bool operator==(const NodeTag&, const NodeTag&) = default;
};

struct Node {
    NodeKind kind = NodeKind::Crossing;
    bool over02 = false;  // the 0-2 strand passes over
    std::array<Port, 4> mate{};
    NodeTag tag{};

    bool is_crossing() const { return kind == NodeKind::Crossing; }
    bool is_vertex() const { return kind == NodeKind::Vertex; }
    bool over(int slot) const { return ((slot & 1) == 0) == over02; }
};

struct ArcTable {
    int node_count = 0;
    std::vector<std::array<Port, 2>> ends;
    std::vector<int> by_key;

    int key(Port p) const { return p.on_boundary() ? 4 * node_count + p.slot : 4 * p.node + p.slot; }
    int of(Port p) const { return by_key[key(p)]; }
    int size() const { return static_cast<int>(ends.size()); }
};

class Diagram {
public:
    Diagram() = default;

    // Validates that mates are symmetric and refer to existing slots.
    static Diagram from_parts(std::vector<Node> nodes, std::array<Port, 4> boundary, bool open,
                              int free_circles);

    bool is_open() const { return open_; }
    int free_circles() const { return free_circles_; }
    int node_count() const { return static_cast<int>(nodes_.size()); }
    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(int i) const { return nodes_[i]; }
    const std::array<Port, 4>& boundary() const { return boundary_; }
    Port mate(Port p) const { return p.on_boundary() ? boundary_[p.slot] : nodes_[p.node].mate[p.slot]; }

    int crossing_count() const;
    int vertex_count() const;
    ArcTable arcs() const;

    Diagram mirrored() const;
    Diagram with_vertex_at(int node) const;
    Diagram with_tags(int summand) const;

private:
    std::vector<Node> nodes_;
    std::array<Port, 4> boundary_{};
    bool open_ = false;
    int free_circles_ = 0;
};

// One box of a decorated 3-braid: each slot is a crossing or a true vertex.
struct BraidSlot {
    bool vertex = false;
    int pos = 0;  // position in the original box, 1-based
};
struct BraidBox {
    int sign = 1;
    int index = 0;  // box index in the original presentation, 1-based
    std::vector<BraidSlot> slots;
};

// Layout: rows 0 (top) to 2. Odd boxes twist rows 1-2, even boxes rows 0-1.
// Left ends: row 1 = NW, row 2 = SW, row 0 runs over the top to NE. The two rows
// not used by the last box are capped off and the remaining row exits at SE.
Diagram build_tangle_diagram(const BoxVector& t, int summand = 0);
Diagram build_braid_diagram(const std::vector<BraidBox>& boxes, int summand = 0);

Diagram compose_sum(const Diagram& a, const Diagram& b);
// T_1 + ... + T_n, nodes tagged with their 1-based summand.
Diagram build_montesinos_diagram(const MontesinosPresentation& m);
Diagram compose_product(const Diagram& a, const Diagram& b);
Diagram vertex_closure(const Diagram& d);
Diagram numerator_closure(const Diagram& d);
Diagram denominator_closure(const Diagram& d);

// Passage through a crossing entering at `in` and leaving at in + 2.
struct Passage {
    int node;
    int in;
    friend bool operator==(const Passage&, const Passage&) = default;
};

struct Walk {
    Port start;  // the port we leave along
    Port end;    // vertex port or boundary where the walk stops
    bool closed = false;
    std::vector<Passage> passages;
    std::vector<Port> leaving;  // start, then the exit port of every passage
};

Walk walk_from(const Diagram& d, Port leaving);

struct StrandPartition {
    std::array<int, 4> partner{-1, -1, -1, -1};
    std::vector<Walk> strands;
    std::vector<Walk> closed_components;  // closed curves made of crossings only
    int free_circles = 0;
    Parity parity() const;
};

StrandPartition trace_strands(const Diagram& d);

// Faces of a closed diagram. A dart (n, s) stands for the corner of node n
// between slots s - 1 and s; face(dart) follows mate and turns to slot + 1.
std::vector<std::vector<Port>> faces(const Diagram& d);
bool euler_check(const Diagram& d);
int connected_components(const Diagram& d);

struct Removal {
    int node;
    std::array<int, 4> pair;  // involution on the slots of the removed node
};

// Deletes nodes and splices their ends as given; loops left over become free circles.
Diagram remove_nodes(const Diagram& d, const std::vector<Removal>& removals);

inline constexpr std::array<int, 4> kStraight{2, 3, 0, 1};

}  // namespace ravel
