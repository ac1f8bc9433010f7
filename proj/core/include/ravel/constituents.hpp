#pragma once

#include <cstddef>
#include <vector>

#include "ravel/diagram.hpp"
#include "ravel/pd.hpp"

namespace ravel {

// Edge of the true-vertex graph: a strand between two vertex ports, running
// straight through any crossings in between.
struct GraphEdge {
    Port a, b;
    std::vector<Passage> passages;  // in the direction a -> b
    std::vector<int> arcs;
};

// A cycle of the true-vertex graph, a closed strand through crossings only, or a free circle.
struct Cycle {
    enum class Kind { Graph, Strand, FreeCircle } kind = Kind::Graph;
    std::vector<int> edges;     // Graph: edge ids in traversal order
    std::vector<int> vertices;  // Graph: node ids, sorted
    int strand = -1;            // Strand: index into VertexGraph::strands
};

struct VertexGraph {
    std::vector<int> vertices;
    std::vector<GraphEdge> edges;
    std::vector<Walk> strands;  // closed curves avoiding every vertex
    std::vector<std::vector<int>> strand_arcs;
    int free_circles = 0;
};

struct ConstituentLink {
    std::vector<int> cycles;  // indices into ConstituentSet::cycles, ascending
};

struct ConstituentSet {
    VertexGraph graph;
    std::vector<Cycle> cycles;
    std::vector<ConstituentLink> links;
};

VertexGraph vertex_graph(const Diagram& d);
std::vector<Cycle> enumerate_cycles(const VertexGraph& g);

// All non-empty sets of pairwise vertex-disjoint cycles. Throws
// std::length_error past `cap` sets.
ConstituentSet constituent_links(const Diagram& d, std::size_t cap = 100000);

PDCode extract_pd(const Diagram& d, const ConstituentSet& set, const ConstituentLink& link);

// Arcs of the diagram used by a cycle.
std::vector<int> cycle_arcs(const ConstituentSet& set, int cycle);

}  // namespace ravel
